"""Certification: every weight in W(rho) is attained, given the bridge rules.

The certificate for sigma_{m,n} is a tame type tau that rho lifts to, such that
sigma_{m,n} is the only Jordan-Holder factor of sigma(tau) in W(rho):

* irreducible rho, n != p-1: the cuspidal type w_2^k + w_2^pk with
  k = n + 2 + (p+1)(m-1);
* tres ramifiee rho, n = p-1: W(rho) is a singleton;
* otherwise the principal series type w^(m+n) + w^m, or the scalar type w^m + w^m
  when n = 0. For n = p-1 the scalar type certifies sigma_{m,0} and the closure
  rule moves it to sigma_{m,p-1}.
"""
import logging
from typing import List, Optional, Tuple

from pydantic import BaseModel

from serrelab.errors import CertificationFailed, NotInWeightSet, PreconditionError
from serrelab.gl2reps import SerreWeight, sort_weights
from serrelab.localgalois import Irred, RamClass, Red, weight_set
from serrelab.pbt import PbtVerdict, has_pbt_lift
from serrelab.tametypes import CuspType, PSType, ScalarType, jh_of_type

from serrelab.consistency.trace import (
    ClosureStep,
    Conclusion,
    JHStep,
    LiftVerdict,
    ProofTrace,
    TypeChoice,
    WeightSetStep,
    WMembership,
)

logger = logging.getLogger(__name__)


def _eigenvalue_label(rho) -> Optional[str]:
    if isinstance(rho, Red) and rho.frob_scalars is not None:
        return rho.frob_scalars[0]
    return None


def _isolate(trace: ProofTrace, rho, tau, rule: str, target: SerreWeight, bridge: str = "types-vs-weights") -> None:
    """Record tau and check that ``target`` is its only Jordan-Holder factor in W(rho)."""
    trace.add(TypeChoice(tau=tau, rule=rule))
    verdict = has_pbt_lift(rho, tau)
    trace.add(LiftVerdict(tau=tau, verdict=verdict))
    if verdict is PbtVerdict.NO:
        raise CertificationFailed(f"{rho.label()} has no potentially Barsotti-Tate lift of type {tau.label()}")
    trace.bridge(bridge)
    jh = jh_of_type(tau)
    trace.add(JHStep(tau=tau, jh=jh))
    members = weight_set(rho)
    for factor in jh.distinct():
        trace.add(WMembership(weight=factor, member=factor in members))
    survivors = {factor for factor in jh if factor in members}
    if survivors != {target}:
        raise CertificationFailed(
            f"{tau.label()} leaves {[w.label() for w in sort_weights(survivors)]} in W({rho.label()})"
        )


def certify(rho, weight: SerreWeight) -> ProofTrace:
    """Certify that ``weight`` is a modular weight of ``rho``.

    Args:
        rho: A local representation.
        weight: A weight in W(rho).

    Returns:
        A trace concluding ``CERTIFIED_UNIQUE`` or ``CERTIFIED_WITH_CLOSURE``.

    Raises:
        NotInWeightSet: If ``weight`` is not in W(rho).
        CertificationFailed: If the recipe's type does not isolate the weight.
    """
    members = weight_set(rho)
    if weight not in members:
        raise NotInWeightSet(f"{weight.label()} is not in W({rho.label()})")
    p, m, n = weight.p, weight.m, weight.n
    trace = ProofTrace(operation="certify", rho=rho, target=weight, eigenvalue_label=_eigenvalue_label(rho))
    trace.add(WMembership(weight=weight, member=True))

    if isinstance(rho, Irred) and n != p - 1:
        # CuspType(k) is w_2^k (+) w_2^pk; the second summand carries the factor p
        tau = CuspType(p=p, k=n + 2 + (p + 1) * (m - 1))
        _isolate(trace, rho, tau, "cuspidal-type-for-irreducible", weight)
        trace.certified_weight = weight
        return trace.conclude(Conclusion.CERTIFIED_UNIQUE)

    if rho.ram_class is RamClass.TRES and n == p - 1:
        trace.bridge("singleton-weight-set")
        trace.add(WeightSetStep(weights=sort_weights(members)))
        if len(members) != 1:
            raise CertificationFailed(f"W({rho.label()}) is not a singleton")
        trace.certified_weight = weight
        return trace.conclude(Conclusion.CERTIFIED_UNIQUE)

    if n == 0:
        _isolate(trace, rho, ScalarType(p=p, m=m), "scalar-type-for-n=0", weight)
        trace.certified_weight = weight
        return trace.conclude(Conclusion.CERTIFIED_UNIQUE)

    if n == p - 1:
        base = SerreWeight(p=p, m=m, n=0)
        trace.add(WMembership(weight=base, member=base in members))
        if base not in members:
            raise PreconditionError(f"{base.label()} is not in W({rho.label()})")
        _isolate(trace, rho, ScalarType(p=p, m=m), "scalar-type-for-substituted-weight", base)
        trace.bridge("weight-2-to-weight-p-1")
        trace.add(ClosureStep(source=base, target=weight))
        trace.certified_weight = base
        return trace.conclude(Conclusion.CERTIFIED_WITH_CLOSURE)

    _isolate(trace, rho, PSType(p=p, m1=m + n, m2=m), "principal-series-type", weight)
    trace.certified_weight = weight
    return trace.conclude(Conclusion.CERTIFIED_UNIQUE)


def refined_ordinary_check(rho, m: int) -> ProofTrace:
    """Certify sigma_{m,p-2} at an ordinary place with rho|I = (w^m *; 0 w^m).

    The type w^m + w^(m-1) has Jordan-Holder factors sigma_{m,p-2} and
    sigma_{m-1,1}; only the first lies in W(rho).

    Raises:
        PreconditionError: If rho is not reducible with sub = quo = m.
    """
    p = rho.p
    if not isinstance(rho, Red) or rho.sub != m % (p - 1) or rho.quo != m % (p - 1):
        raise PreconditionError("the refined check needs rho|I = (w^m *; 0 w^m)")
    target = SerreWeight(p=p, m=m, n=p - 2)
    trace = ProofTrace(
        operation="refined_ordinary", rho=rho, target=target, eigenvalue_label=_eigenvalue_label(rho)
    )
    tau = PSType(p=p, m1=m, m2=m - 1)
    trace.add(TypeChoice(tau=tau, rule="ordinary-principal-series-type"))
    trace.bridge("refined-types-vs-weights")
    jh = jh_of_type(tau)
    trace.add(JHStep(tau=tau, jh=jh))
    members = weight_set(rho)
    for factor in jh.distinct():
        trace.add(WMembership(weight=factor, member=factor in members))
    survivors = {factor for factor in jh if factor in members}
    if survivors != {target}:
        raise CertificationFailed(f"{tau.label()} does not isolate {target.label()}")
    trace.certified_weight = target
    return trace.conclude(Conclusion.CERTIFIED_UNIQUE)


class GlobalCertificate(BaseModel):
    """Place-by-place certificates and the global weight they combine to."""

    places: List[ProofTrace]
    weight: Tuple[SerreWeight, ...]
    substituted_weight: Tuple[SerreWeight, ...]
    eigenvalue_places: List[int]

    @property
    def uses_closure(self) -> bool:
        return self.weight != self.substituted_weight


def certify_global(rhos: List, weights: List[SerreWeight]) -> GlobalCertificate:
    """Certify a global weight given one local representation per place above p.

    Raises:
        PreconditionError: If the lists are empty or of different lengths.
    """
    if not rhos or len(rhos) != len(weights):
        raise PreconditionError("need one weight for each of at least one place above p")
    places = [certify(rho, weight) for rho, weight in zip(rhos, weights)]
    return GlobalCertificate(
        places=places,
        weight=tuple(weights),
        substituted_weight=tuple(trace.certified_weight for trace in places),
        eigenvalue_places=[index for index, trace in enumerate(places) if trace.eigenvalue_label is not None],
    )
