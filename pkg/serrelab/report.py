"""Rendering of engine results for the command line.

Each result has a ``*_payload`` builder producing the JSON document and a
``show_*`` function printing rich tables and panels.
"""
import json
from typing import Iterable, List

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from serrelab.consistency import GlobalCertificate, ProofTrace, ReplayReport, SweepSummary
from serrelab.gl2reps import SerreWeight
from serrelab.glnweights import TableRow
from serrelab.ledger import GlobalSetup, UnitaryBound
from serrelab.localgalois import to_record
from serrelab.sympair import SesReport

console = Console()


def dumps(payload) -> str:
    return json.dumps(payload, indent=2)


def weight_pairs(weights: Iterable[SerreWeight]) -> List[List[int]]:
    return [[w.m, w.n] for w in weights]


def _weights_text(weights: Iterable[SerreWeight]) -> str:
    return ", ".join(w.label() for w in weights) or "(none)"


# Weight sets

def weights_payload(weights: List[SerreWeight]) -> dict:
    return {"weights": weight_pairs(weights)}


def show_weights(rho, weights: List[SerreWeight]) -> None:
    table = Table(title=f"W({rho.label()})  p={rho.p}")
    table.add_column("m", justify="right")
    table.add_column("n", justify="right")
    table.add_column("weight")
    table.add_column("dim", justify="right")
    for w in weights:
        table.add_row(str(w.m), str(w.n), w.label(), str(w.dim))
    console.print(table)
    console.print(f"{len(weights)} weight(s)")


def global_weights_payload(products) -> dict:
    return {"global_weights": [weight_pairs(product) for product in products]}


def show_global_weights(products) -> None:
    table = Table(title="Global weights")
    table.add_column("#", justify="right")
    table.add_column("weight at each place above p")
    for index, product in enumerate(products, 1):
        table.add_row(str(index), " x ".join(w.label() for w in product))
    console.print(table)


# Tame types

def types_payload(rows) -> dict:
    return {
        "types": [
            {"type": tau.model_dump(mode="json"), "label": tau.label(), "jh": weight_pairs(jh)}
            for tau, jh in rows
        ]
    }


def show_types(p: int, rows) -> None:
    table = Table(title=f"Tame types at p={p}")
    table.add_column("kind")
    table.add_column("type")
    table.add_column("reduction of sigma(tau)")
    for tau, jh in rows:
        table.add_row(tau.kind, tau.label(), _weights_text(jh))
    console.print(table)


# Reductions

def reduction_payload(rows) -> dict:
    documents = []
    for rep, jh, report in rows:
        document = {"rep": rep.model_dump(mode="json"), "label": rep.label(), "jh": weight_pairs(jh)}
        if report is not None:
            document["oracle"] = report.status
        documents.append(document)
    return {"reductions": documents}


def show_reductions(p: int, rows) -> None:
    table = Table(title=f"Reductions mod p={p}")
    table.add_column("representation")
    table.add_column("Jordan-Holder factors")
    table.add_column("dim", justify="right")
    table.add_column("oracle")
    for rep, jh, report in rows:
        status = "-" if report is None else report.status
        style = "red" if report is not None and not report.verified else None
        table.add_row(rep.label(), _weights_text(jh), str(jh.dimension), status, style=style)
    console.print(table)


# Potentially Barsotti-Tate lifts

def pbt_payload(rho, tau, shapes, verdict) -> dict:
    return {
        "rho": to_record(rho),
        "type": tau.model_dump(mode="json"),
        "allowed_shapes": [shape.model_dump(mode="json") for shape in shapes],
        "verdict": verdict.value,
    }


def show_pbt(rho, tau, shapes, matched, verdict) -> None:
    table = Table(title=f"{rho.label()} against {tau.label()}")
    table.add_column("allowed pattern")
    table.add_column("matches")
    for shape in shapes:
        table.add_row(shape.label(), "yes" if shape in matched else "no")
    console.print(table)
    console.print(Panel(f"verdict: [bold]{verdict.value}[/bold]", border_style="blue"))


# Proof traces

def _step_text(step) -> str:
    kind = step.step
    if kind == "type_choice":
        return f"choose {step.tau.label()} ({step.rule})"
    if kind == "bridge":
        return f"bridge {step.name}: {step.citation}"
    if kind == "convention":
        return f"convention {step.name}"
    if kind == "shapes":
        owner = step.tau.label() if step.tau is not None else "ordinary"
        return f"{owner} allows " + "; ".join(shape.label() for shape in step.shapes)
    if kind == "match":
        return f"{step.shape.label()}: {'matched' if step.matched else 'not matched'}"
    if kind == "jh":
        return f"JH({step.tau.label()}) = {_weights_text(step.jh)}"
    if kind == "pbt":
        return f"lift of type {step.tau.label()}: {step.verdict.value}"
    if kind == "weight_set":
        return f"W = {{{_weights_text(step.weights)}}}"
    if kind == "membership":
        return f"{step.weight.label()} {'in' if step.member else 'not in'} W"
    if kind == "closure":
        return f"{step.source.label()} -> {step.target.label()}"
    return f"conclusion: {step.conclusion.value}"


def trace_payload(trace: ProofTrace, replayed: ReplayReport) -> dict:
    return {"trace": trace.model_dump(mode="json", exclude_none=True), "replay": replayed.model_dump(mode="json")}


def show_trace(trace: ProofTrace, replayed: ReplayReport) -> None:
    table = Table(title=f"{trace.operation} {trace.target.label()} for {trace.rho.label()}")
    table.add_column("#", justify="right")
    table.add_column("step")
    table.add_column("detail")
    for index, step in enumerate(trace.steps):
        table.add_row(str(index), step.step, _step_text(step))
    console.print(table)
    lines = [f"conclusion: [bold]{trace.conclusion.value}[/bold]"]
    if trace.certified_weight is not None:
        lines.append(f"certified weight: {trace.certified_weight.label()}")
    if trace.eigenvalue_label is not None:
        lines.append(f"Hecke eigenvalue: {trace.eigenvalue_label}")
    lines.append("replay: ok" if replayed.ok else f"replay: mismatch at step {replayed.first_mismatch}: {replayed.detail}")
    console.print(Panel("\n".join(lines), border_style="green" if replayed.ok else "red"))


def global_certificate_payload(certificate: GlobalCertificate) -> dict:
    return {
        "weight": weight_pairs(certificate.weight),
        "substituted_weight": weight_pairs(certificate.substituted_weight),
        "eigenvalue_places": certificate.eigenvalue_places,
        "places": [trace.model_dump(mode="json", exclude_none=True) for trace in certificate.places],
    }


# Sweeps

def sweep_payload(summary: SweepSummary) -> dict:
    return {
        "p": summary.p,
        "reps": summary.reps,
        "cases": summary.cases,
        "status": summary.status,
        "counterexamples": [c.model_dump(mode="json") for c in summary.counterexamples],
    }


def show_sweep(summary: SweepSummary) -> None:
    if summary.all_pass:
        console.print(f"✅ {summary.status}")
        return
    table = Table(title=f"Counterexamples at p={summary.p}")
    table.add_column("check")
    table.add_column("rho")
    table.add_column("weight")
    table.add_column("detail")
    for c in summary.counterexamples:
        table.add_row(c.check, json.dumps(c.rho), c.weight.label(), c.detail)
    console.print(table)
    console.print(f"❌ {summary.status}")


# Pairing checks

def sympair_payload(reports: List) -> dict:
    documents = []
    for report in reports:
        document = report.model_dump(mode="json")
        document["status"] = report.status
        documents.append(document)
    return {"checks": documents}


def show_sympair(reports: List) -> None:
    table = Table(title="Symmetric power pairing checks")
    table.add_column("check")
    table.add_column("p", justify="right")
    table.add_column("r", justify="right")
    table.add_column("cases", justify="right")
    table.add_column("status")
    for report in reports:
        if isinstance(report, SesReport):
            cases = f"{report.image_dim}+{report.kernel_dim}"
        else:
            cases = str(report.checks)
        table.add_row(getattr(report, "name", "ses"), str(report.p), str(report.r), cases, report.status)
    console.print(table)


# GL3 table

def gl3_payload(rows: List[TableRow]) -> dict:
    return {
        "rows": [
            {
                "weight": list(row.exponents),
                "dominant": row.dominant,
                "ht": row.targets,
                "witness": row.witness.model_dump(mode="json") if row.witness is not None else None,
                "label": row.witness.label() if row.witness is not None else None,
                "agrees": row.agrees,
            }
            for row in rows
        ]
    }


def show_gl3(p: int, rows: List[TableRow]) -> None:
    table = Table(title=f"Weights for 1 + w^2 + w^4 at p={p}")
    table.add_column("weight")
    table.add_column("HT weights")
    table.add_column("crystalline lift")
    table.add_column("written", justify="center")
    for row in rows:
        weight = "(" + ",".join(str(a) for a in row.exponents) + ")"
        if not row.dominant:
            weight += " *"
        lift = row.witness.label() if row.witness is not None else "(no catalog lift)"
        table.add_row(weight, str(row.targets), lift, "✓" if row.agrees else "✗")
    console.print(table)
    if not all(row.dominant for row in rows):
        console.print("* not dominant at this p")


# Ledger

def ledger_payload(setup: GlobalSetup, values: dict, unitary: UnitaryBound = None) -> dict:
    payload = {"setup": setup.model_dump(mode="json"), **values}
    if unitary is not None:
        payload["unitary_bound"] = {**unitary.model_dump(mode="json"), "is_one": unitary.is_one}
    return payload


def show_ledger(setup: GlobalSetup, values: dict, unitary: UnitaryBound = None) -> None:
    table = Table(title=f"[F:Q]={setup.degree}, |Sigma|={setup.sigma_size}, places above p {list(setup.places_over_p)}")
    table.add_column("quantity")
    table.add_column("value", justify="right")
    for name, value in values.items():
        table.add_row(name, str(value))
    if unitary is not None:
        table.add_row(
            f"unitary bound (n={unitary.n}, mu={unitary.mu}, [F+:Q]={unitary.degree_fplus})",
            f"{unitary.value}" + (" (= 1)" if unitary.is_one else ""),
        )
    console.print(table)
