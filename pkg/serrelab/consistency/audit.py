"""Replay of proof traces.

``replay`` checks a trace in two passes. Each step carrying a computed value
is recomputed, and each step about a type must concern the type chosen last.
Then the recipe for ``trace.operation`` is run again on the trace's rho and
target; its type choices, certified weight and conclusion must be the ones
recorded.
"""
import logging
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from serrelab.errors import SerreLabError
from serrelab.gl2reps import sort_weights
from serrelab.localgalois import matches, weight_set
from serrelab.pbt import allowed_shapes, has_pbt_lift
from serrelab.tametypes import jh_of_type

from serrelab.consistency.certify import certify, refined_ordinary_check
from serrelab.consistency.eliminate import eliminate
from serrelab.consistency.trace import (
    ConclusionStep,
    JHStep,
    LiftVerdict,
    MatchStep,
    ProofTrace,
    ShapeConstraint,
    TypeChoice,
    WeightSetStep,
    WMembership,
    ordinary_shape,
)

logger = logging.getLogger(__name__)


class ReplayReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    ok: bool
    steps_checked: int
    first_mismatch: Optional[int] = None
    detail: str = ""


def _recompute(trace: ProofTrace, step) -> Optional[str]:
    """Return a description of the disagreement, or None when the step replays."""
    rho = trace.rho
    if isinstance(step, ShapeConstraint):
        expected = [ordinary_shape(trace.target)] if step.tau is None else allowed_shapes(step.tau)
        return None if expected == list(step.shapes) else f"allowed_shapes gives {expected}"
    if isinstance(step, MatchStep):
        actual = matches(rho, step.shape)
        return None if actual == step.matched else f"matches gives {actual}"
    if isinstance(step, JHStep):
        actual = jh_of_type(step.tau)
        return None if actual == step.jh else f"jh_of_type gives {actual}"
    if isinstance(step, LiftVerdict):
        actual = has_pbt_lift(rho, step.tau)
        return None if actual == step.verdict else f"has_pbt_lift gives {actual.value}"
    if isinstance(step, WeightSetStep):
        actual = sort_weights(weight_set(rho))
        return None if actual == list(step.weights) else "weight_set differs"
    if isinstance(step, WMembership):
        actual = step.weight in weight_set(rho)
        return None if actual == step.member else f"membership is {actual}"
    return None


def _off_type(step, chosen) -> Optional[str]:
    """A step about a type must name the type of the latest TypeChoice."""
    if isinstance(step, (JHStep, LiftVerdict)) or (isinstance(step, ShapeConstraint) and step.tau is not None):
        if chosen is None:
            return f"{step.tau.label()} used before any type was chosen"
        if step.tau != chosen:
            return f"{step.tau.label()} is not the chosen type {chosen.label()}"
    return None


def _rerun(trace: ProofTrace) -> ProofTrace:
    if trace.operation == "eliminate":
        return eliminate(trace.rho, trace.target)
    if trace.operation == "certify":
        return certify(trace.rho, trace.target)
    return refined_ordinary_check(trace.rho, trace.target.m)


def _choices(trace: ProofTrace) -> List[Tuple[int, TypeChoice]]:
    return [(index, step) for index, step in enumerate(trace.steps) if isinstance(step, TypeChoice)]


def _mismatch(index: int, checked: int, detail: str) -> ReplayReport:
    logger.debug("replay mismatch at step %d: %s", index, detail)
    return ReplayReport(ok=False, steps_checked=checked, first_mismatch=index, detail=detail)


def replay(trace: ProofTrace) -> ReplayReport:
    """Check every step of ``trace`` and that its conclusion follows.

    Returns:
        ``ok`` when nothing disagrees; otherwise the index of the first
        disagreeing step and what the engines give there.
    """
    chosen = None
    for index, step in enumerate(trace.steps):
        if isinstance(step, TypeChoice):
            chosen = step.tau
        problem = _off_type(step, chosen) or _recompute(trace, step)
        if problem is not None:
            return _mismatch(index, index + 1, f"{step.step}: {problem}")

    last = len(trace.steps) - 1
    if not trace.steps or not isinstance(trace.steps[-1], ConclusionStep):
        return ReplayReport(ok=False, steps_checked=len(trace.steps), detail="trace has no conclusion")
    if sum(isinstance(step, ConclusionStep) for step in trace.steps) != 1:
        return _mismatch(last, len(trace.steps), "trace has more than one conclusion")

    try:
        expected = _rerun(trace)
    except SerreLabError as exc:
        return _mismatch(last, len(trace.steps), f"the {trace.operation} recipe fails: {exc}")

    recorded, rerun = _choices(trace), _choices(expected)
    for position, (index, choice) in enumerate(recorded):
        if position >= len(rerun):
            return _mismatch(index, len(trace.steps), f"{trace.operation} makes only {len(rerun)} type choice(s)")
        required = rerun[position][1]
        if (choice.tau, choice.rule) != (required.tau, required.rule):
            return _mismatch(
                index, len(trace.steps), f"{trace.operation} chooses {required.tau.label()} ({required.rule})"
            )
    if len(recorded) < len(rerun):
        return _mismatch(last, len(trace.steps), f"{trace.operation} makes {len(rerun)} type choice(s)")
    if trace.certified_weight != expected.certified_weight:
        return _mismatch(last, len(trace.steps), "certified weight differs from the recipe's")
    if trace.eigenvalue_label != expected.eigenvalue_label:
        return _mismatch(last, len(trace.steps), "eigenvalue label differs from the recipe's")
    if trace.conclusion is not expected.conclusion:
        return _mismatch(last, len(trace.steps), f"the steps force {expected.conclusion.value}")
    return ReplayReport(ok=True, steps_checked=len(trace.steps))
