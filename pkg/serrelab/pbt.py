"""Potentially Barsotti-Tate lifts of a given tame type.

``allowed_shapes`` lists the inertia patterns a local representation must have
to admit such a lift. ``has_pbt_lift`` turns that necessary condition into a
verdict, upgraded to ``YES`` only under the endomorphism hypotheses for which
the converse is known.
"""
import logging
from enum import Enum
from typing import List

from serrelab.arith import bracket_ext, is_niveau2, niveau2_decompose
from serrelab.localgalois import ShapeIrred, ShapeRed, matches
from serrelab.tametypes import CuspType, ScalarType

logger = logging.getLogger(__name__)


class PbtVerdict(str, Enum):
    NO = "No"
    NECESSARY_ONLY = "NecessaryOnly"
    YES = "Yes"


def allowed_shapes(tau) -> List:
    """Inertia patterns compatible with a potentially Barsotti-Tate lift of type ``tau``.

    Args:
        tau: A tame type.

    Returns:
        The patterns in a fixed order. For niveau 1 types with exponents
        (i, j) the order is (w^(1+i), w^j), (w^(1+j), w^i), then the niveau 2
        pattern. For cuspidal types the two niveau 2 patterns come first,
        minus any whose exponent is divisible by p+1.
    """
    p = tau.p
    if isinstance(tau, CuspType):
        i, j = niveau2_decompose(p, tau.k)
        j = int(j)
        shapes = [
            ShapeIrred(p=p, k=exponent)
            for exponent in (1 + tau.k, p + tau.k)
            if is_niveau2(p, exponent)
        ]
        shapes.append(ShapeRed(p=p, a=i + j, b=1 + j, requires_peu=(i == 2)))
        shapes.append(ShapeRed(p=p, a=1 + j, b=i + j, requires_peu=(i == p - 1)))
        return shapes
    if isinstance(tau, ScalarType):
        i = j = tau.m
    else:
        i, j = tau.m1, tau.m2
    peu = i == j
    return [
        ShapeRed(p=p, a=1 + i, b=j, requires_peu=peu),
        ShapeRed(p=p, a=1 + j, b=i, requires_peu=peu),
        ShapeIrred(p=p, k=1 + bracket_ext(p, j - i) + (p + 1) * i),
    ]


def matching_shapes(rho, tau) -> List:
    """The allowed shapes of ``tau`` that ``rho`` matches."""
    return [shape for shape in allowed_shapes(tau) if matches(rho, shape)]


def has_pbt_lift(rho, tau) -> PbtVerdict:
    """Decide whether ``rho`` has a potentially Barsotti-Tate lift of type ``tau``."""
    if not matching_shapes(rho, tau):
        return PbtVerdict.NO
    if isinstance(tau, CuspType):
        converse = rho.scalar_endos
    else:
        converse = rho.split or rho.scalar_endos
    return PbtVerdict.YES if converse else PbtVerdict.NECESSARY_ONLY
