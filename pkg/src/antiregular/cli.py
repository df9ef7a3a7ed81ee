"""Command line interface.

Every command emits JSON by default (--format text for a terse human
form).  Exit codes: 0 success / property holds, 1 property fails (the
witness is in the output), 2 usage error, 3 instance-size guard exceeded.
Unbounded integers (labels, thresholds, coefficients, degrees) are always
serialized as decimal strings.
"""

from __future__ import annotations

import functools
import json
import sys
from pathlib import Path

import click

from .errors import GuardExceeded
from .hypergraph import (
    BuildingString,
    Hypergraph,
    antiregular_string,
    build_hypergraph,
    degree_sequence,
    hypergraph_from_json,
    hypergraph_to_json,
    recognize_zero_one_constructable,
)
from .ipoly import (
    ipoly_antiregular_recurrence,
    ipoly_bruteforce,
    ipoly_k3_closed,
    ipoly_semiclosed,
    ipoly_trinks,
    is_log_concave,
)
from .sweep import default_workers, run_sweep
from .threshold import Labeling, algorithm1_labels, t2_feasibility, verify_t2, verify_t3

_format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["json", "text"]),
    default="json",
    show_default=True,
    help="Output format.",
)
_noguard_option = click.option(
    "--unsafe-no-guard",
    is_flag=True,
    help="Disable instance-size guards (may run for a very long time).",
)


def _translate_errors(f):
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except GuardExceeded as exc:
            click.echo(f"guard exceeded: {exc}", err=True)
            sys.exit(3)
        except ValueError as exc:
            raise click.UsageError(str(exc)) from exc

    return wrapper


def _emit(payload: dict, fmt: str, lines: list[str]) -> None:
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2))
    else:
        for line in lines:
            click.echo(line)


def _warn_noguard(flag: bool) -> None:
    if flag:
        click.echo("warning: instance-size guards disabled", err=True)


def _load_hypergraph(path: str) -> Hypergraph:
    try:
        return hypergraph_from_json(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise click.UsageError(f"cannot read hypergraph from {path}: {exc}")


def _string_input(string: str | None, k: int | None, file: str | None):
    """Resolve the (--string --k | --file) alternative to (H, maybe string)."""
    if (string is None) == (file is None):
        raise click.UsageError("provide exactly one of --string or --file")
    if string is not None:
        if k is None:
            raise click.UsageError("--string requires --k")
        b = BuildingString(string, k)
        return build_hypergraph(b), b
    return _load_hypergraph(file), None


@click.group()
def main() -> None:
    """Independence polynomials and threshold labelings of k-uniform hypergraphs."""


@main.command()
@click.option("--n", type=int, required=True, help="Vertex count.")
@click.option("--k", type=int, required=True, help="Edge size.")
@click.option("--connected", is_flag=True, help="Connected variant.")
@_format_option
@_translate_errors
def gen(n: int, k: int, connected: bool, fmt: str) -> None:
    """Emit the antiregular building string for (n, k)."""
    b = antiregular_string(n, k, connected)
    payload = {"string": b.bits, "k": k, "n": n, "connected": connected}
    _emit(payload, fmt, [b.bits])


@main.command()
@click.option("--string", required=True, help="Building string.")
@click.option("--k", type=int, required=True, help="Edge size.")
@_format_option
@_translate_errors
def build(string: str, k: int, fmt: str) -> None:
    """Build the hypergraph a building string encodes."""
    h = build_hypergraph(BuildingString(string, k))
    payload = hypergraph_to_json(h)
    lines = [f"n={h.n} k={h.k} edges={len(h.edges)}"]
    lines += [" ".join(map(str, e)) for e in sorted(h.edges)]
    _emit(payload, fmt, lines)


_METHODS = ["brute", "trinks", "recurrence", "closed", "semiclosed", "all"]


@main.command()
@click.option("--string", default=None, help="Building string.")
@click.option("--k", type=int, default=None, help="Edge size (with --string).")
@click.option("--file", default=None, help="Hypergraph JSON file.")
@click.option(
    "--method",
    type=click.Choice(_METHODS),
    default="all",
    show_default=True,
    help="Computation method; 'all' runs every applicable one and cross-checks.",
)
@_format_option
@_noguard_option
@_translate_errors
def ipoly(string, k, file, method, fmt, unsafe_no_guard) -> None:
    """Independence polynomial of a built or loaded hypergraph."""
    _warn_noguard(unsafe_no_guard)
    guard = not unsafe_no_guard
    h, b = _string_input(string, k, file)
    structural = b is not None and b.is_antiregular()
    connected = b.bits.endswith("1") if b is not None else False

    def compute(name: str):
        if name == "brute":
            return ipoly_bruteforce(h, guard=guard)
        if name == "trinks":
            return ipoly_trinks(h, guard=guard)
        if not structural:
            raise click.UsageError(
                f"method {name} needs an antiregular building string"
            )
        if name == "recurrence":
            return ipoly_antiregular_recurrence(h.n, h.k, connected)
        if name == "closed":
            if h.k != 3:
                raise click.UsageError("closed form only exists for k=3")
            return ipoly_k3_closed(h.n, connected)
        return ipoly_semiclosed(h.n, h.k, connected)

    if method == "all":
        names = ["brute", "trinks"]
        if structural:
            names.append("recurrence")
            if h.k == 3:
                names.append("closed")
            try:
                ipoly_semiclosed(h.n, h.k, connected)
            except ValueError:
                pass  # below the validity range; skip
            else:
                names.append("semiclosed")
    else:
        names = [method]
    polys = {name: compute(name) for name in names}
    agree = len({p.coeffs for p in polys.values()}) == 1
    payload = {
        "n": h.n,
        "k": h.k,
        "methods": {name: p.to_decimal_strings() for name, p in polys.items()},
        "agree": agree,
    }
    lines = [f"{name}: {p}" for name, p in polys.items()] + [f"agree: {agree}"]
    _emit(payload, fmt, lines)
    if not agree:
        sys.exit(1)


@main.command()
@click.option("--string", default=None, help="Single building string to check.")
@click.option("--k", type=int, required=True, help="Edge size.")
@click.option("--max-n", type=int, default=None, help="Sweep antiregular instances up to this size.")
@_format_option
@_translate_errors
def logconcave(string, k, max_n, fmt) -> None:
    """Check log-concavity of independence polynomial coefficients."""
    if string is None and max_n is None:
        raise click.UsageError("provide --string and/or --max-n")
    witnesses = []
    checked = 0
    if string is not None:
        p = ipoly_trinks(build_hypergraph(BuildingString(string, k)))
        checked += 1
        report = is_log_concave(p)
        if not report.holds:
            witnesses.append({"string": string, "index": report.first_violation})
    if max_n is not None:
        for n in range(1, max_n + 1):
            for connected in [False] if n < k else [False, True]:
                p = ipoly_antiregular_recurrence(n, k, connected)
                checked += 1
                report = is_log_concave(p)
                if not report.holds:
                    witnesses.append(
                        {
                            "n": n,
                            "connected": connected,
                            "index": report.first_violation,
                        }
                    )
    holds = not witnesses
    payload = {"k": k, "checked": checked, "holds": holds, "witnesses": witnesses}
    lines = [f"checked {checked} polynomials: {'all log-concave' if holds else witnesses}"]
    _emit(payload, fmt, lines)
    if not holds:
        sys.exit(1)


@main.command()
@click.option("--string", required=True, help="Building string.")
@click.option("--k", type=int, required=True, help="Edge size.")
@_format_option
@_translate_errors
def label(string: str, k: int, fmt: str) -> None:
    """Threshold labels for a building string (file-ready labeling JSON)."""
    lab = algorithm1_labels(BuildingString(string, k))
    lines = ["c = " + " ".join(map(str, lab.c)), f"tau = {lab.tau}"]
    _emit(lab.to_json(), fmt, lines)


@main.command("verify-t2")
@click.option("--string", default=None, help="Building string.")
@click.option("--k", type=int, default=None, help="Edge size (with --string).")
@click.option("--file", default=None, help="Hypergraph JSON file.")
@click.option("--labels", required=True, help="Labeling JSON file, or 'auto'.")
@_format_option
@_noguard_option
@_translate_errors
def verify_t2_cmd(string, k, file, labels, fmt, unsafe_no_guard) -> None:
    """Check that a labeling realizes the hypergraph as a sum threshold."""
    _warn_noguard(unsafe_no_guard)
    h, b = _string_input(string, k, file)
    if labels == "auto":
        if b is None:
            raise click.UsageError(
                "auto labels require a building string; give --labels a file for --file input"
            )
        if "1" in b.bits:
            lab = algorithm1_labels(b)
        else:
            lab = Labeling((0,) * h.n, h.k)  # edgeless: nothing may exceed tau
    else:
        try:
            lab = Labeling.from_json(Path(labels).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise click.UsageError(f"cannot read labeling from {labels}: {exc}")
    verdict = verify_t2(h, lab, guard=not unsafe_no_guard)
    payload = {"holds": verdict.holds}
    if verdict.witness is not None:
        payload["witness"] = list(verdict.witness)
    lines = ["holds" if verdict.holds else f"FAIL at subset {verdict.witness}"]
    _emit(payload, fmt, lines)
    if not verdict.holds:
        sys.exit(1)


@main.command("verify-t3")
@click.option("--file", required=True, help="Hypergraph JSON file.")
@_format_option
@_noguard_option
@_translate_errors
def verify_t3_cmd(file, fmt, unsafe_no_guard) -> None:
    """Check that replacement order compares every vertex pair."""
    _warn_noguard(unsafe_no_guard)
    verdict = verify_t3(_load_hypergraph(file), guard=not unsafe_no_guard)
    payload = {"holds": verdict.holds}
    if verdict.witness is not None:
        payload["witness"] = list(verdict.witness)
    lines = ["holds" if verdict.holds else f"FAIL at pair {verdict.witness}"]
    _emit(payload, fmt, lines)
    if not verdict.holds:
        sys.exit(1)


@main.command()
@click.option("--string", default=None, help="Building string.")
@click.option("--k", type=int, default=None, help="Edge size (with --string).")
@click.option("--file", default=None, help="Hypergraph JSON file.")
@_format_option
@_translate_errors
def degrees(string, k, file, fmt) -> None:
    """Vertex degree sequence in label order."""
    h, _ = _string_input(string, k, file)
    seq = degree_sequence(h)
    payload = {"n": h.n, "k": h.k, "degrees": [str(d) for d in seq]}
    _emit(payload, fmt, [" ".join(map(str, seq))])


@main.command("feasible-t2")
@click.option("--file", required=True, help="Hypergraph JSON file.")
@_format_option
@_noguard_option
@_translate_errors
def feasible_t2_cmd(file, fmt, unsafe_no_guard) -> None:
    """Decide rational sum-threshold feasibility; witness labels if feasible."""
    _warn_noguard(unsafe_no_guard)
    verdict = t2_feasibility(_load_hypergraph(file), guard=not unsafe_no_guard)
    payload: dict = {"feasible": verdict.feasible}
    lines = ["feasible" if verdict.feasible else "infeasible"]
    if verdict.labeling is not None:
        payload.update(verdict.labeling.to_json())
        lines += ["c = " + " ".join(map(str, verdict.labeling.c)), f"tau = {verdict.labeling.tau}"]
    _emit(payload, fmt, lines)
    if not verdict.feasible:
        sys.exit(1)


@main.command()
@click.option("--file", required=True, help="Hypergraph JSON file.")
@_format_option
@_noguard_option
@_translate_errors
def recognize(file, fmt, unsafe_no_guard) -> None:
    """Recover a building string, or report that none exists."""
    _warn_noguard(unsafe_no_guard)
    h = _load_hypergraph(file)
    b = recognize_zero_one_constructable(h, guard=not unsafe_no_guard)
    if b is None:
        _emit({"constructable": False, "string": None}, fmt, ["not constructable"])
        sys.exit(1)
    payload = {"constructable": True, "string": b.bits, "k": b.k}
    _emit(payload, fmt, [b.bits])


@main.command()
@click.option("--k-max", type=int, required=True, help="Largest edge size.")
@click.option("--n-max", type=int, required=True, help="Largest vertex count.")
@_format_option
@_translate_errors
def sweep(k_max, n_max, fmt) -> None:
    """Exhaustive polynomial-agreement and labeling sweep (parallel)."""
    report = run_sweep(k_max, n_max, workers=default_workers())
    payload = {
        "k_max": report.k_max,
        "n_max": report.n_max,
        "polynomial_instances": report.polynomial_instances,
        "string_instances": report.string_instances,
        "failures": report.failures,
        "ok": report.ok,
    }
    lines = [
        f"polynomial instances: {report.polynomial_instances}",
        f"labelled strings:     {report.string_instances}",
        f"failures:             {len(report.failures)}",
    ] + report.failures
    _emit(payload, fmt, lines)
    if not report.ok:
        sys.exit(1)


if __name__ == "__main__":
    main()
