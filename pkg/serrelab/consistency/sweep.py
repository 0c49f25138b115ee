"""Exhaustive consistency sweep over every local datum and weight at p."""
import logging
from typing import List

from pydantic import BaseModel, ConfigDict, Field

from serrelab.errors import SerreLabError
from serrelab.gl2reps import SerreWeight, all_weights
from serrelab.localgalois import Red, enumerate_local_reps, to_record, weight_set

from serrelab.consistency.audit import replay
from serrelab.consistency.certify import certify, refined_ordinary_check
from serrelab.consistency.eliminate import eliminate
from serrelab.consistency.trace import Conclusion

logger = logging.getLogger(__name__)

CERTIFIED = (Conclusion.CERTIFIED_UNIQUE, Conclusion.CERTIFIED_WITH_CLOSURE)


class Counterexample(BaseModel):
    model_config = ConfigDict(frozen=True)

    check: str
    rho: dict
    weight: SerreWeight
    detail: str


class SweepSummary(BaseModel):
    p: int
    reps: int
    cases: int = 0
    counterexamples: List[Counterexample] = Field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return not self.counterexamples

    @property
    def status(self) -> str:
        if self.all_pass:
            return f"AllPass: {self.cases} cases"
        return f"Failed: {len(self.counterexamples)} of {self.cases} cases"


def _check_trace(summary: SweepSummary, check: str, rho, weight, trace, expected) -> None:
    summary.cases += 1
    problems = []
    if trace.conclusion not in expected:
        problems.append(f"concluded {trace.conclusion}")
    report = replay(trace)
    if not report.ok:
        problems.append(f"replay failed at step {report.first_mismatch}: {report.detail}")
    if problems:
        summary.counterexamples.append(
            Counterexample(check=check, rho=to_record(rho), weight=weight, detail="; ".join(problems))
        )


def sweep(p: int) -> SweepSummary:
    """Check elimination, certification and replay for every local datum at p.

    Args:
        p: A prime >= 5.

    Returns:
        The number of cases checked and every counterexample found.
    """
    reps = enumerate_local_reps(p)
    weights = all_weights(p)
    summary = SweepSummary(p=p, reps=len(reps))
    for rho in reps:
        members = weight_set(rho)
        for weight in weights:
            expected = (Conclusion.CONSISTENT,) if weight in members else (Conclusion.CONTRADICTION,)
            _check_trace(summary, "eliminate", rho, weight, eliminate(rho, weight), expected)
            if weight not in members:
                continue
            try:
                trace = certify(rho, weight)
            except SerreLabError as exc:
                summary.cases += 1
                summary.counterexamples.append(
                    Counterexample(check="certify", rho=to_record(rho), weight=weight, detail=str(exc))
                )
                continue
            _check_trace(summary, "certify", rho, weight, trace, CERTIFIED)
        if isinstance(rho, Red) and rho.sub == rho.quo:
            target = SerreWeight(p=p, m=rho.sub, n=p - 2)
            try:
                trace = refined_ordinary_check(rho, rho.sub)
            except SerreLabError as exc:
                summary.cases += 1
                summary.counterexamples.append(
                    Counterexample(check="refined_ordinary", rho=to_record(rho), weight=target, detail=str(exc))
                )
                continue
            _check_trace(summary, "refined_ordinary", rho, target, trace, (Conclusion.CERTIFIED_UNIQUE,))
    logger.info("sweep p=%d: %s", p, summary.status)
    return summary
