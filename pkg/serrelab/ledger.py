"""Dimension bookkeeping for framed and unframed deformation rings.

Only integers are computed here. Lower bounds that come out negative are
returned as they are.
"""
import logging
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, model_validator

from serrelab.errors import DegreeMismatch, PreconditionError

logger = logging.getLogger(__name__)


class GlobalSetup(BaseModel):
    """A totally real field F with the finite set Sigma of places carrying conditions.

    ``places_over_p`` lists [F_v:Q_p] for the places of F above p, which all lie
    in Sigma.
    """
    model_config = ConfigDict(frozen=True)

    degree: PositiveInt
    sigma_size: PositiveInt
    places_over_p: Tuple[PositiveInt, ...] = Field(min_length=1)

    @model_validator(mode="after")
    def _check_degrees(self):
        if sum(self.places_over_p) != self.degree:
            raise DegreeMismatch(
                f"local degrees {list(self.places_over_p)} sum to {sum(self.places_over_p)}, not [F:Q]={self.degree}"
            )
        if self.sigma_size < len(self.places_over_p):
            raise PreconditionError("every place above p must lie in Sigma")
        return self

    @classmethod
    def split(cls, degree: int, sigma_size: int) -> "GlobalSetup":
        """p totally split in F."""
        return cls(degree=degree, sigma_size=sigma_size, places_over_p=(1,) * degree)


def dim_local_framed(v_divides_p: bool, local_degree: int = 1) -> int:
    """Dimension of the framed local ring with fixed determinant and type.

    Args:
        v_divides_p: Whether the place lies above p.
        local_degree: [F_v:Q_p]; only used when v lies above p.

    Raises:
        PreconditionError: If v lies above p and ``local_degree`` < 1.
    """
    if not v_divides_p:
        return 4
    if local_degree < 1:
        raise PreconditionError(f"[F_v:Q_p]={local_degree} must be positive")
    return 4 + local_degree


def dim_local_framed_general(d: int) -> int:
    """Framed local ring of a d-dimensional representation at a place away from p."""
    if d < 1:
        raise PreconditionError(f"d={d} must be positive")
    return d * d


def dim_local_unframed(d: int, scalar_endos: bool = True) -> int:
    """Relative dimension left after removing the framing, when End(rho) = F."""
    if not scalar_endos:
        raise PreconditionError("the unframed ring is only representable when End(rho) is scalar")
    dim_local_framed_general(d)
    return 1


def dim_local_unitary(n: int, v_divides_l: bool, local_degree: int = 1) -> int:
    """Local framed dimension for rank n unitary-type deformations."""
    if n < 1:
        raise PreconditionError(f"n={n} must be positive")
    if not v_divides_l:
        return 1 + n * n
    if local_degree < 1:
        raise PreconditionError(f"[F_v:Q_l]={local_degree} must be positive")
    return 1 + n * n + n * (n - 1) // 2 * local_degree


def local_parts(setup: GlobalSetup) -> List[int]:
    """dim_local_framed for each place of Sigma, places above p first."""
    away = setup.sigma_size - len(setup.places_over_p)
    return [dim_local_framed(True, d) for d in setup.places_over_p] + [dim_local_framed(False)] * away


def dim_sigma(setup: GlobalSetup) -> int:
    """3|Sigma| + [F:Q] + 1."""
    value = 3 * setup.sigma_size + setup.degree + 1
    from_parts = sum(local_parts(setup)) - (setup.sigma_size - 1)
    if value != from_parts:
        raise AssertionError(f"closed form {value} disagrees with the local sum {from_parts}")
    return value


def global_bounds(setup: GlobalSetup) -> Tuple[int, int]:
    """Lower bounds (framed, unframed) for the global deformation rings: (4|Sigma|, 1)."""
    return 4 * setup.sigma_size, 1


def framed_to_unframed(setup: GlobalSetup) -> Tuple[int, int]:
    """Relative dimension of the framed over the unframed ring, and the unframed bound."""
    relative = 4 * setup.sigma_size - 1
    return relative, global_bounds(setup)[0] - relative


def presentation_bound(setup: GlobalSetup, r: int) -> int:
    """dim_sigma + (r + |Sigma| - 1) generators minus r + [F:Q] relations.

    The number r cancels; the result is always 4|Sigma|.
    """
    if r < 0:
        raise PreconditionError(f"r={r} must be non-negative")
    return dim_sigma(setup) + (r + setup.sigma_size - 1) - (r + setup.degree)


class UnitaryBound(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: PositiveInt
    mu: int
    degree_fplus: PositiveInt
    value: int

    @property
    def is_one(self) -> bool:
        return (self.mu - self.n) % 2 == 0


def unitary_bound(n: int, mu: int, degree_fplus: int) -> UnitaryBound:
    """1 - (n/2)[F+:Q](1 + (-1)^(1+n+mu)).

    Raises:
        PreconditionError: If n or the degree is not positive, or mu is not 0 or 1.
    """
    if n < 1 or degree_fplus < 1:
        raise PreconditionError("n and [F+:Q] must be positive")
    if mu not in (0, 1):
        raise PreconditionError(f"mu={mu} must be 0 or 1")
    # n/2 * (1 + (-1)^(1+n+mu)) is n when 1+n+mu is even and 0 otherwise
    value = 1 - (n * degree_fplus if (1 + n + mu) % 2 == 0 else 0)
    logger.debug("unitary bound n=%d mu=%d [F+:Q]=%d: %d", n, mu, degree_fplus, value)
    return UnitaryBound(n=n, mu=mu, degree_fplus=degree_fplus, value=value)
