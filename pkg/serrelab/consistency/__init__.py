"""Elimination and certification arguments with replayable traces."""
from serrelab.consistency.audit import ReplayReport, replay
from serrelab.consistency.certify import GlobalCertificate, certify, certify_global, refined_ordinary_check
from serrelab.consistency.eliminate import eliminate
from serrelab.consistency.sweep import Counterexample, SweepSummary, sweep
from serrelab.consistency.trace import Conclusion, ProofTrace

__all__ = [
    "Conclusion",
    "Counterexample",
    "GlobalCertificate",
    "ProofTrace",
    "ReplayReport",
    "SweepSummary",
    "certify",
    "certify_global",
    "eliminate",
    "refined_ordinary_check",
    "replay",
    "sweep",
]
