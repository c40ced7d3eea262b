"""Command-line front end.

Exit codes: 0 pass, 1 check failure, 2 input error, 3 construction failure.
"""

from __future__ import annotations

import argparse
import sys
import time

from coendcheck import __version__
from coendcheck import axioms as ax
from coendcheck import fibre
from coendcheck.coend import (build_coend, build_core_maps, check_density,
                              export_algebra_datum)
from coendcheck.exactla import Mat
from coendcheck.fixtures import FIXTURE_NAMES, emit_fixture
from coendcheck.lincat import utrace_report, validate_category, validate_monoidal
from coendcheck.report import FAIL, INFO, CheckReport, ConstructionError, PresentationError
from coendcheck.specfile import SpecError, dumps_json, load_spec

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_CONSTRUCTION = 0, 1, 2, 3
TOOL = f"coendcheck {__version__}"


class Timer:
    def __init__(self):
        self.laps = {}

    def lap(self, name, start):
        self.laps[name] = f"{time.perf_counter() - start:.3f}"


def validation_reports(spec) -> list[CheckReport]:
    cat, mon, U = spec.cat, spec.mon, spec.U
    return [
        validate_category(cat),
        validate_monoidal(cat, mon),
        utrace_report(cat, mon),
        fibre.validate_functor(cat, mon, U),
        fibre.check_coherence(cat, mon, U),
        fibre.check_separability(cat, mon, U),
        fibre.check_frobenius_conditions(cat, mon, U),
        fibre.check_braided_compat(cat, mon, U),
        fibre.check_duality_compat(cat, mon, U),
        fibre.check_u_naturality(cat, mon, U),
        fibre.check_utrace_compat(cat, mon, U),
        fibre.check_u_irreducibility(cat, U)[0],
    ]


def construct(spec):
    """Coend space, core maps and exported datum; raises ``ConstructionError``."""
    cat, mon, U = spec.cat, spec.mon, spec.U
    _, grading = fibre.check_u_irreducibility(cat, U)
    E = build_coend(cat, U)
    maps = build_core_maps(cat, mon, U, E, grading)
    return E, maps, grading, export_algebra_datum(E, maps, U.dim[mon.unit])


def debug_antipode(d: ax.AlgebraDatum, mode: str | None) -> ax.AlgebraDatum:
    if mode == "identity":
        return d.replace(antipode=Mat.identity(d.dim))
    if mode == "zero":
        return d.replace(antipode=Mat.zeros(d.dim, d.dim))
    return d


def suite_reports(spec, d: ax.AlgebraDatum, suite: str, gens=None) -> list[CheckReport]:
    reports = ax.core_suite(d)
    if suite == "core":
        return reports
    cat, mon, U = spec.cat, spec.mon, spec.U
    reports += ax.check_fusion(d)
    reports += ax.check_counit_unit_defects(d)
    reports += ax.implication_chain(reports)
    sq = d.antipode @ d.antipode
    reports.append(CheckReport("antipode.square", INFO, None,
                               {"holds": sq.is_identity()}))
    reports += [
        fibre.check_frobenius_conditions(cat, mon, U),
        fibre.check_duality_compat(cat, mon, U),
        fibre.check_utrace_compat(cat, mon, U),
        check_density(cat, U, cat.objects if gens is None else gens),
    ]
    return reports


def overall(reports) -> str:
    return FAIL if any(r.verdict == FAIL for r in reports) else "pass"


def run_report(spec, command, reports, **extra) -> dict:
    out = {"tool": TOOL, "command": command, "spec": spec.name}
    out.update(extra)
    out["verdict"] = overall(reports)
    out["checks"] = [r.to_json() for r in reports]
    return out


def _witness_text(w: dict) -> str:
    parts = []
    for k, v in w.items():
        if k == "entry":
            parts.append(f"entry ({v[0]}, {v[1]})")
        elif k == "value":
            parts.append(f"= {v}")
        else:
            parts.append(f"{k} {v}")
    return "; ".join(parts)


def render_text(report: dict) -> str:
    lines = []
    for c in report["checks"]:
        if c["verdict"] == INFO:
            holds = c.get("info", {}).get("holds", True)
            mark, note = "·", "holds" if holds else "does not hold"
            lines.append(f"{mark} {c['name']} (informational: {note})")
        elif c["verdict"] == FAIL:
            w = c.get("witness")
            lines.append(f"✗ {c['name']}" + (f"  [{_witness_text(w)}]" if w else ""))
        else:
            lines.append(f"✓ {c['name']}")
    tail = f"verdict: {report['verdict']}"
    if "coend_dim" in report:
        tail += f" (coend dimension {report['coend_dim']})"
    lines.append(tail)
    return "\n".join(lines) + "\n"


def emit(report: dict, fmt: str, out=None):
    text = dumps_json(report) if fmt == "json" else render_text(report)
    (out or sys.stdout).write(text)


def _input_error(exc) -> int:
    print(f"input error: {exc}", file=sys.stderr)
    return EXIT_INPUT


def _construction_error(exc: ConstructionError) -> int:
    print(f"construction failure: {exc}", file=sys.stderr)
    print(dumps_json({"error": str(exc), "witness": exc.witness}), end="", file=sys.stderr)
    return EXIT_CONSTRUCTION


def cmd_validate(args) -> int:
    spec = load_spec(args.file)
    reports = validation_reports(spec)
    report = run_report(spec, "validate", reports)
    emit(report, args.report)
    return EXIT_PASS if report["verdict"] == "pass" else EXIT_FAIL


def cmd_coend(args) -> int:
    spec = load_spec(args.file)
    try:
        E, maps, grading, d = construct(spec)
    except ConstructionError as exc:
        return _construction_error(exc)
    doc = {
        "tool": TOOL,
        "spec": spec.name,
        "q": E.q,
        "blocks": E.block_table(),
        "grading": {str(n): objs for n, objs in grading.items()},
        "dim_UI": spec.U.dim[spec.mon.unit],
        "maps": {
            "mu": maps.mu.to_json(),
            "eta": maps.eta.to_json(),
            "delta": maps.delta.to_json(),
            "eps": maps.eps.to_json(),
            "antipode": maps.antipode.to_json(),
            "sigma_blocks": {a: m.to_json() for a, m in maps.sigma_blocks.items()},
        },
        "antipode_squared_is_identity": (maps.antipode @ maps.antipode).is_identity(),
    }
    text = dumps_json(doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        print(f"q = {E.q}")
    else:
        sys.stdout.write(text)
    return EXIT_PASS


def cmd_check(args) -> int:
    timer = Timer()
    t = time.perf_counter()
    spec = load_spec(args.file)
    timer.lap("load", t)
    t = time.perf_counter()
    try:
        E, maps, grading, d = construct(spec)
    except ConstructionError as exc:
        return _construction_error(exc)
    timer.lap("construct", t)
    d = debug_antipode(d, args.debug_antipode)
    if args.gens is not None:
        unknown = [g for g in args.gens if g not in spec.cat.objects]
        if unknown:
            return _input_error(f"unknown generator objects {unknown}")
    t = time.perf_counter()
    reports = suite_reports(spec, d, args.suite, args.gens)
    timer.lap("checks", t)
    extra = {"suite": args.suite, "coend_dim": E.q}
    if args.debug_antipode:
        extra["debug_antipode"] = args.debug_antipode
    report = run_report(spec, "check", reports, **extra)
    if args.timings:
        report["timings"] = timer.laps
    emit(report, args.report)
    return EXIT_PASS if report["verdict"] == "pass" else EXIT_FAIL


def cmd_fixture(args) -> int:
    try:
        emit_fixture(args.name, args.emit)
    except OSError as exc:
        return _input_error(exc)
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coendcheck", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=TOOL)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check the category, monoidal data and functor")
    v.add_argument("file")
    v.add_argument("--report", choices=("json", "text"), default="text")
    v.set_defaults(func=cmd_validate)

    c = sub.add_parser("coend", help="build the coend and print its structure maps")
    c.add_argument("file")
    c.add_argument("--out")
    c.set_defaults(func=cmd_coend)

    k = sub.add_parser("check", help="run the axiom suite on the coend")
    k.add_argument("file")
    k.add_argument("--suite", choices=("core", "all"), default="core")
    k.add_argument("--report", choices=("json", "text"), default="text")
    k.add_argument("--debug-antipode", choices=("identity", "zero"))
    k.add_argument("--gens", nargs="+", metavar="OBJ",
                   help="generating objects for the density check (default: all)")
    k.add_argument("--timings", action="store_true")
    k.set_defaults(func=cmd_check)

    f = sub.add_parser("fixture", help="write a built-in example as a spec file")
    f.add_argument("--name", required=True, choices=FIXTURE_NAMES)
    f.add_argument("--emit", required=True, metavar="FILE")
    f.set_defaults(func=cmd_fixture)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SpecError, PresentationError, OSError) as exc:
        return _input_error(exc)


if __name__ == "__main__":
    sys.exit(main())
