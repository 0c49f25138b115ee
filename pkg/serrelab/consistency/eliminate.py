"""Elimination: a weight outside W(rho) cannot be a modular weight of rho.

For sigma_{m,n} with n != p-1 the argument runs through the principal series
type w^(m+n) + w^m, of which sigma_{m,n} is a Jordan-Holder factor. If rho
only has the second reducible pattern of that type, a cuspidal type carrying
sigma_{m,n} finishes the argument. For n = p-1 the scalar type w^m + w^m and
the ordinary pattern are the two possibilities.
"""
import logging

from serrelab.localgalois import ShapeRed, matches, weight_set
from serrelab.pbt import allowed_shapes
from serrelab.tametypes import CuspType, PSType, ScalarType, jh_of_type

from serrelab.consistency.trace import (
    Conclusion,
    ConventionNote,
    JHStep,
    MatchStep,
    ProofTrace,
    ShapeConstraint,
    TypeChoice,
    WMembership,
    ordinary_shape,
)

logger = logging.getLogger(__name__)

ZERO_BRACKET = "bracket-zero-is-p-1"


def _constrain(trace: ProofTrace, tau, rho) -> list:
    """Record tau, its reduction and its patterns; return the patterns rho matches."""
    trace.add(JHStep(tau=tau, jh=jh_of_type(tau)))
    trace.bridge("types-vs-weights")
    shapes = allowed_shapes(tau)
    trace.add(ShapeConstraint(tau=tau, shapes=shapes))
    if isinstance(tau, ScalarType):
        trace.add(ConventionNote(name=ZERO_BRACKET))
    hits = []
    for shape in shapes:
        matched = matches(rho, shape)
        trace.add(MatchStep(shape=shape, matched=matched))
        if matched:
            hits.append(shape)
    return hits


def eliminate(rho, weight) -> ProofTrace:
    """Decide whether ``weight`` survives the elimination argument for ``rho``.

    Args:
        rho: A local representation.
        weight: A Serre weight at the same prime.

    Returns:
        A trace concluding ``CONSISTENT`` or ``CONTRADICTION``.
    """
    trace = ProofTrace(operation="eliminate", rho=rho, target=weight)
    if weight.n == weight.p - 1:
        consistent = _eliminate_top(trace, rho, weight)
    else:
        consistent = _eliminate_generic(trace, rho, weight)
    trace.add(WMembership(weight=weight, member=weight in weight_set(rho)))
    logger.debug("eliminate %s for %s: %s", weight.label(), rho.label(), consistent)
    return trace.conclude(Conclusion.CONSISTENT if consistent else Conclusion.CONTRADICTION)


def _eliminate_generic(trace: ProofTrace, rho, weight) -> bool:
    p, m, n = weight.p, weight.m, weight.n
    if n == 0:
        first = ScalarType(p=p, m=m)
        trace.add(TypeChoice(tau=first, rule="scalar-type-for-n=0"))
    else:
        first = PSType(p=p, m1=m + n, m2=m)
        trace.add(TypeChoice(tau=first, rule="principal-series-type"))
    hits = _constrain(trace, first, rho)
    if not hits:
        return False
    bad = ShapeRed(p=p, a=m + 1, b=m + n)
    if n == 0 or any(shape != bad for shape in hits):
        return True
    second = CuspType(p=p, k=(m - 1) * (p + 1) + n + 2)
    trace.add(TypeChoice(tau=second, rule="cuspidal-type-for-second-pattern"))
    return bool(_constrain(trace, second, rho))


def _eliminate_top(trace: ProofTrace, rho, weight) -> bool:
    p, m = weight.p, weight.m
    tau = ScalarType(p=p, m=m)
    trace.add(TypeChoice(tau=tau, rule="scalar-type-for-n=p-1"))
    trace.bridge("ordinary-fallback-n=p-1")
    hits = _constrain(trace, tau, rho)
    ordinary = ordinary_shape(weight)
    trace.add(ShapeConstraint(tau=None, shapes=[ordinary]))
    matched = matches(rho, ordinary)
    trace.add(MatchStep(shape=ordinary, matched=matched))
    return bool(hits) or matched
