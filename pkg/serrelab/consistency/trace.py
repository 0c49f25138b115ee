"""Proof traces for elimination and certification.

A trace records each rule application with its operands and outputs. Traces
serialize to JSON through pydantic; ``replay`` in ``serrelab.consistency.audit``
checks them against the engines.
"""
from enum import Enum
from typing import Annotated, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from serrelab.gl2reps import JHMultiset, SerreWeight
from serrelab.localgalois import InertiaShape, LocalModPRep, ShapeRed
from serrelab.pbt import PbtVerdict
from serrelab.tametypes import TameType

BRIDGE_CITATIONS = {
    "types-vs-weights": (
        "if rho has a potentially Barsotti-Tate lift of type tau and lifts to a modular "
        "representation of that type, then some Jordan-Holder factor of sigma(tau) is a "
        "modular weight, and conversely"
    ),
    "refined-types-vs-weights": (
        "at an ordinary place, modularity of weight sigma(tau) is detected by the "
        "Jordan-Holder factor selected by the ordinary Hecke eigenvalue"
    ),
    "ordinary-fallback-n=p-1": (
        "a modular rho of weight sigma_{m,p-1} has either a potentially Barsotti-Tate lift "
        "of type w^m + w^m or an ordinary potentially semistable lift"
    ),
    "singleton-weight-set": (
        "a tres ramifiee rho is modular of some weight; W(rho) has one element"
    ),
    "weight-2-to-weight-p-1": (
        "modularity of weight sigma_{m,0} with split rho gives weight sigma_{m,p-1} "
        "with the same Hecke eigenvalue"
    ),
}

BridgeName = Literal[
    "types-vs-weights",
    "refined-types-vs-weights",
    "ordinary-fallback-n=p-1",
    "singleton-weight-set",
    "weight-2-to-weight-p-1",
]


class Conclusion(str, Enum):
    CONSISTENT = "Consistent"
    CONTRADICTION = "Contradiction"
    CERTIFIED_UNIQUE = "CertifiedUnique"
    CERTIFIED_WITH_CLOSURE = "CertifiedWithClosure"


class _Step(BaseModel):
    model_config = ConfigDict(frozen=True)


class TypeChoice(_Step):
    step: Literal["type_choice"] = "type_choice"
    tau: TameType
    rule: str


class BridgeRule(_Step):
    step: Literal["bridge"] = "bridge"
    name: BridgeName
    citation: str = ""


class ConventionNote(_Step):
    step: Literal["convention"] = "convention"
    name: str


class ShapeConstraint(_Step):
    """Patterns rho must match. ``tau`` is None for the ordinary reducible pattern."""
    step: Literal["shapes"] = "shapes"
    tau: Optional[TameType] = None
    shapes: List[InertiaShape]


class MatchStep(_Step):
    step: Literal["match"] = "match"
    shape: InertiaShape
    matched: bool


class JHStep(_Step):
    step: Literal["jh"] = "jh"
    tau: TameType
    jh: JHMultiset


class LiftVerdict(_Step):
    step: Literal["pbt"] = "pbt"
    tau: TameType
    verdict: PbtVerdict


class WeightSetStep(_Step):
    step: Literal["weight_set"] = "weight_set"
    weights: List[SerreWeight]


class WMembership(_Step):
    step: Literal["membership"] = "membership"
    weight: SerreWeight
    member: bool


class ClosureStep(_Step):
    step: Literal["closure"] = "closure"
    source: SerreWeight
    target: SerreWeight


class ConclusionStep(_Step):
    step: Literal["conclusion"] = "conclusion"
    conclusion: Conclusion


Step = Annotated[
    Union[
        TypeChoice,
        BridgeRule,
        ConventionNote,
        ShapeConstraint,
        MatchStep,
        JHStep,
        LiftVerdict,
        WeightSetStep,
        WMembership,
        ClosureStep,
        ConclusionStep,
    ],
    Field(discriminator="step"),
]


class ProofTrace(BaseModel):
    """An elimination or certification argument for one (rho, sigma) pair."""

    operation: Literal["eliminate", "certify", "refined_ordinary"]
    rho: LocalModPRep
    target: SerreWeight
    steps: List[Step] = Field(default_factory=list)
    certified_weight: Optional[SerreWeight] = None
    eigenvalue_label: Optional[str] = None

    def add(self, step) -> None:
        self.steps.append(step)

    def bridge(self, name: str) -> None:
        self.add(BridgeRule(name=name, citation=BRIDGE_CITATIONS[name]))

    def conclude(self, conclusion: Conclusion) -> "ProofTrace":
        self.add(ConclusionStep(conclusion=conclusion))
        return self

    @property
    def conclusion(self) -> Optional[Conclusion]:
        for step in reversed(self.steps):
            if isinstance(step, ConclusionStep):
                return step.conclusion
        return None


def ordinary_shape(weight: SerreWeight) -> ShapeRed:
    """The ordinary pattern (w^(m+1) *; 0 w^m) left open for sigma_{m,p-1}."""
    return ShapeRed(p=weight.p, a=weight.m + 1, b=weight.m)

