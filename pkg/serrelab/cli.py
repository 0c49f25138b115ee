"""Command Line Interface for SerreLab.

Every engine is exposed as a subcommand printing rich tables, or JSON with
``--format json``. Exit status is 0 on success, 1 when a verification fails
and 2 on bad input.
"""
import functools
import json
import logging

import click
import yaml
from pydantic import TypeAdapter, ValidationError
from rich.console import Console
from rich.logging import RichHandler

from serrelab import __version__, report
from serrelab.banner import show_banner
from serrelab.brauer import brauer_verify
from serrelab.config import load_settings, settings_source
from serrelab.consistency import ProofTrace, certify, certify_global, eliminate, replay, sweep
from serrelab.errors import CertificationFailed, SerreLabError
from serrelab.gl2reps import CharZeroRep, SerreWeight, enumerate_reps, reduce, sort_weights
from serrelab.glnweights import table_gl3
from serrelab.ledger import (
    GlobalSetup,
    dim_sigma,
    framed_to_unframed,
    global_bounds,
    local_parts,
    presentation_bound,
    unitary_bound,
)
from serrelab.localgalois import LocalModPRep, from_record, global_weight_set, weight_set
from serrelab.pbt import allowed_shapes, has_pbt_lift, matching_shapes
from serrelab.sympair import check_bracket_identities, hecke_compat_check, pairing_equivariance_check, ses_check
from serrelab.tametypes import TameType, enumerate_types, jh_of_type

logger = logging.getLogger(__name__)

_char_zero = TypeAdapter(CharZeroRep)
_tame_type = TypeAdapter(TameType)

# JSON records accepted and printed by the commands
SCHEMAS = {
    "local-rep": TypeAdapter(LocalModPRep),
    "char-zero-rep": _char_zero,
    "weight": TypeAdapter(SerreWeight),
    "type": _tame_type,
    "trace": TypeAdapter(ProofTrace),
}


def _setup_logging(debug: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if debug else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def domain_errors(command):
    """Report domain and validation errors as usage errors."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (SerreLabError, ValidationError) as exc:
            raise click.UsageError(str(exc)) from exc
    return wrapper


def _load_json(text: str, option: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise click.BadParameter(f"not valid JSON: {exc}", param_hint=option) from exc


def _parse_degrees(text: str) -> tuple:
    try:
        return tuple(int(d) for d in text.split(","))
    except ValueError:
        raise click.BadParameter(f"expected comma separated integers, got {text!r}", param_hint="--places")


def format_option(command):
    return click.option(
        "--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True,
        help="Output format",
    )(command)


def rep_options(command):
    """Options describing one local representation."""
    options = [
        click.option("--rep-json", help="Local representation as a JSON record"),
        click.option("--niveau2", is_flag=True, help="Irreducible: rho|I = w2^k + w2^pk"),
        click.option("--k", type=int, help="Niveau 2 exponent"),
        click.option("--sub", type=int, help="Exponent of the subcharacter on inertia"),
        click.option("--quo", type=int, help="Exponent of the quotient character on inertia"),
        click.option("--split", is_flag=True, help="rho is a direct sum"),
        click.option("--inertia-split", is_flag=True, help="Non-split, but split on inertia"),
        click.option("--ram", type=click.Choice(["peu", "tres"]), help="Class of a ramified extension"),
        click.option("--scalar-endos", is_flag=True, help="End(rho) consists of scalars"),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def _local_rep(p, rep_json, niveau2, k, sub, quo, split, inertia_split, ram, scalar_endos):
    if rep_json:
        return from_record(_load_json(rep_json, "--rep-json"))
    if p is None:
        raise click.UsageError("--p is required unless --rep-json is given")
    if niveau2:
        if k is None:
            raise click.UsageError("--niveau2 needs --k")
        return from_record({"niveau": 2, "p": p, "k": k})
    if sub is None or quo is None:
        raise click.UsageError("give --rep-json, --niveau2 --k, or --sub and --quo")
    record = {
        "niveau": 1, "p": p, "sub": sub, "quo": quo,
        "split": split, "inertia_split": inertia_split, "scalar_endos": scalar_endos,
    }
    if ram:
        record["ram_class"] = ram
    return from_record(record)


def _emit(fmt: str, payload: dict, show) -> None:
    if fmt == "json":
        click.echo(report.dumps(payload))
    else:
        show()


@click.group(epilog="""\b
Examples:
  Weight set of an irreducible representation:
    serrelab weights --p 5 --niveau2 --k 2

  Certify a weight and print the argument:
    serrelab certify --p 5 --niveau2 --k 2 --m 0 --n 1

  Run the exhaustive consistency sweep:
    serrelab sweep --p 5

  Crystalline lifts for the GL3 example:
    serrelab gl3-table --p 7

  JSON schemas of the records:
    serrelab schema""", invoke_without_command=True)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), help="YAML settings file")
@click.option("--debug", is_flag=True, help="Enable debug logging")
@click.version_option(__version__)
@click.pass_context
def main(ctx, config_path, debug):
    """SerreLab - Serre weights, tame types and their bookkeeping."""
    _setup_logging(debug)
    try:
        ctx.obj = load_settings(config_path)
    except (ValidationError, yaml.YAMLError) as exc:
        raise click.BadParameter(str(exc), param_hint="--config") from exc
    ctx.meta["config_path"] = config_path
    if ctx.invoked_subcommand is None:
        show_banner()


@main.command()
@click.option("--p", type=int, help="The prime")
@click.option("--place", "places", multiple=True, help="JSON record of one place above p (repeatable)")
@rep_options
@format_option
@domain_errors
def weights(p, places, fmt, **rep):
    """Predicted Serre weights W(rho), or global weights over several places."""
    if places:
        products = global_weight_set([from_record(_load_json(place, "--place")) for place in places])
        _emit(fmt, report.global_weights_payload(products), lambda: report.show_global_weights(products))
        return
    rho = _local_rep(p, **rep)
    found = sort_weights(weight_set(rho))
    _emit(fmt, report.weights_payload(found), lambda: report.show_weights(rho, found))


@main.command()
@click.option("--p", type=int, required=True, help="The prime")
@format_option
@domain_errors
def types(p, fmt):
    """Every tame type at p with the reduction of its representation."""
    rows = [(tau, jh_of_type(tau)) for tau in enumerate_types(p)]
    _emit(fmt, report.types_payload(rows), lambda: report.show_types(p, rows))


@main.command("reduce")
@click.option("--p", type=int, help="The prime, with --all")
@click.option("--rep-json", help="Characteristic zero representation as a JSON record")
@click.option("--all", "every", is_flag=True, help="Reduce every irreducible representation at p")
@click.option("--oracle/--no-oracle", default=True, show_default=True, help="Check with Brauer characters")
@format_option
@click.pass_context
@domain_errors
def reduce_command(ctx, p, rep_json, every, oracle, fmt):
    """Jordan-Holder factors of reductions mod p."""
    if every:
        if p is None:
            raise click.UsageError("--all needs --p")
        reps = enumerate_reps(p)
    elif rep_json:
        reps = [_char_zero.validate_python(_load_json(rep_json, "--rep-json"))]
    else:
        raise click.UsageError("give --rep-json or --all")
    rows = []
    for rep in reps:
        jh = reduce(rep)
        verdict = brauer_verify(rep, jh, max_degree=ctx.obj.max_cyclotomic_degree) if oracle else None
        rows.append((rep, jh, verdict))
    _emit(fmt, report.reduction_payload(rows), lambda: report.show_reductions(reps[0].p, rows))
    if any(verdict is not None and not verdict.verified for _, _, verdict in rows):
        ctx.exit(1)


@main.command()
@click.option("--p", type=int, help="The prime")
@click.option("--type-json", required=True, help="Tame type as a JSON record")
@rep_options
@format_option
@domain_errors
def pbt(p, type_json, fmt, **rep):
    """Whether rho has a potentially Barsotti-Tate lift of a tame type."""
    rho = _local_rep(p, **rep)
    tau = _tame_type.validate_python(_load_json(type_json, "--type-json"))
    shapes = allowed_shapes(tau)
    matched = matching_shapes(rho, tau)
    verdict = has_pbt_lift(rho, tau)
    _emit(fmt, report.pbt_payload(rho, tau, shapes, verdict),
          lambda: report.show_pbt(rho, tau, shapes, matched, verdict))


def _show_trace(ctx, fmt, trace) -> None:
    replayed = replay(trace)
    _emit(fmt, report.trace_payload(trace, replayed), lambda: report.show_trace(trace, replayed))
    if not replayed.ok:
        ctx.exit(1)


@main.command("eliminate")
@click.option("--p", type=int, help="The prime")
@click.option("--m", type=int, required=True, help="Weight exponent m")
@click.option("--n", type=int, required=True, help="Weight exponent n")
@rep_options
@format_option
@click.pass_context
@domain_errors
def eliminate_command(ctx, p, m, n, fmt, **rep):
    """Run the elimination argument for sigma_{m,n}."""
    rho = _local_rep(p, **rep)
    _show_trace(ctx, fmt, eliminate(rho, SerreWeight(p=rho.p, m=m, n=n)))


def _parse_weight(p: int, text: str) -> SerreWeight:
    try:
        m, n = (int(part) for part in text.split(","))
    except ValueError:
        raise click.UsageError(f"expected --weight M,N, got {text!r}")
    return SerreWeight(p=p, m=m, n=n)


@main.command("certify")
@click.option("--p", type=int, help="The prime")
@click.option("--m", type=int, help="Weight exponent m")
@click.option("--n", type=int, help="Weight exponent n")
@click.option("--place", "places", multiple=True, help="JSON record of one place above p (repeatable)")
@click.option("--weight", "place_weights", multiple=True, help="M,N for the matching --place")
@rep_options
@format_option
@click.pass_context
@domain_errors
def certify_command(ctx, p, m, n, places, place_weights, fmt, **rep):
    """Certify that sigma_{m,n} is a modular weight of rho."""
    try:
        if places:
            rhos = [from_record(_load_json(place, "--place")) for place in places]
            chosen = [_parse_weight(rho.p, text) for rho, text in zip(rhos, place_weights)]
            certificate = certify_global(rhos, chosen if len(place_weights) == len(rhos) else [])
            replays = [replay(trace) for trace in certificate.places]
            if fmt == "json":
                click.echo(report.dumps(report.global_certificate_payload(certificate)))
            else:
                for trace, replayed in zip(certificate.places, replays):
                    report.show_trace(trace, replayed)
            if not all(replayed.ok for replayed in replays):
                ctx.exit(1)
            return
        if m is None or n is None:
            raise click.UsageError("certify needs --m and --n")
        rho = _local_rep(p, **rep)
        trace = certify(rho, SerreWeight(p=rho.p, m=m, n=n))
    except CertificationFailed as exc:
        click.echo(f"Certification failed: {exc}", err=True)
        ctx.exit(1)
    _show_trace(ctx, fmt, trace)


@main.command("sweep")
@click.option("--p", type=int, required=True, help="The prime")
@format_option
@click.pass_context
@domain_errors
def sweep_command(ctx, p, fmt):
    """Exhaustive check of elimination, certification and replay at p."""
    summary = sweep(p)
    _emit(fmt, report.sweep_payload(summary), lambda: report.show_sweep(summary))
    if not summary.all_pass:
        ctx.exit(1)


@main.command("sympair-check")
@click.option("--p", type=int, required=True, help="The prime")
@click.option("--r", type=int, help="Degree; every r in 1..p-2 when omitted")
@click.option("--seed", type=int, help="Seed for the random tuples (settings default)")
@click.option("--tuples", type=int, help="Number of random tuples (settings default)")
@format_option
@click.pass_context
@domain_errors
def sympair_check(ctx, p, r, seed, tuples, fmt):
    """Pairing, Hecke compatibility and short exact sequence checks on Sym^r."""
    settings = ctx.obj
    seed = settings.seed if seed is None else seed
    tuples = settings.random_tuples if tuples is None else tuples
    degrees = [r] if r is not None else range(1, p - 1)
    reports = []
    for degree in degrees:
        reports.append(check_bracket_identities(p, degree))
        reports.append(hecke_compat_check(p, degree, seed=seed, tuples=tuples))
        reports.append(pairing_equivariance_check(p, degree))
        reports.append(ses_check(p, degree))
    _emit(fmt, report.sympair_payload(reports), lambda: report.show_sympair(reports))
    if not all(item.passed for item in reports):
        ctx.exit(1)


@main.command("gl3-table")
@click.option("--p", type=int, required=True, help="The prime")
@format_option
@click.pass_context
@domain_errors
def gl3_table(ctx, p, fmt):
    """Crystalline lifts for the weights predicted for 1 + w^2 + w^4."""
    rows = table_gl3(p)
    _emit(fmt, report.gl3_payload(rows), lambda: report.show_gl3(p, rows))
    if any(row.dominant and not row.agrees for row in rows):
        ctx.exit(1)


@main.command()
@click.option("--degree", type=int, required=True, help="[F:Q]")
@click.option("--sigma", "sigma_size", type=int, required=True, help="|Sigma|")
@click.option("--places", help="Comma separated [F_v:Q_p] for the places above p (default: p splits)")
@click.option("--r", type=int, default=0, show_default=True, help="Number of extra generators in a presentation")
@click.option("--n", type=int, help="Rank for the unitary bound")
@click.option("--mu", type=int, help="Parity mu for the unitary bound")
@click.option("--fplus", type=int, help="[F+:Q] for the unitary bound")
@format_option
@domain_errors
def ledger(degree, sigma_size, places, r, n, mu, fplus, fmt):
    """Dimension counts for the deformation rings of a global setup."""
    if places:
        setup = GlobalSetup(
            degree=degree, sigma_size=sigma_size, places_over_p=_parse_degrees(places)
        )
    else:
        setup = GlobalSetup.split(degree, sigma_size)
    framed, unframed = global_bounds(setup)
    relative, derived = framed_to_unframed(setup)
    values = {
        "local_framed": local_parts(setup),
        "dim_sigma": dim_sigma(setup),
        "framed_bound": framed,
        "unframed_bound": unframed,
        "framed_over_unframed": relative,
        "unframed_from_framed": derived,
        "presentation_bound": presentation_bound(setup, r),
    }
    unitary = None
    if n is not None or mu is not None or fplus is not None:
        if n is None or mu is None or fplus is None:
            raise click.UsageError("the unitary bound needs --n, --mu and --fplus")
        unitary = unitary_bound(n, mu, fplus)
    _emit(fmt, report.ledger_payload(setup, values, unitary), lambda: report.show_ledger(setup, values, unitary))


@main.command()
@click.pass_context
def config(ctx):
    """Show the effective settings and where they come from."""
    source = settings_source(ctx.meta.get("config_path"))
    click.echo(f"Settings file: {source}")
    for name, value in ctx.obj.model_dump().items():
        click.echo(f"  {name}: {value}")


@main.command()
@click.option("--name", type=click.Choice(list(SCHEMAS)), help="Print one schema instead of all")
def schema(name):
    """JSON schemas of the records the commands read and print."""
    names = [name] if name else list(SCHEMAS)
    click.echo(report.dumps({key: SCHEMAS[key].json_schema() for key in names}))


if __name__ == "__main__":
    main()
