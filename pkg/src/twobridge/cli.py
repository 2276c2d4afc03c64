"""Command-line interface.

Exit codes: 0 success, 1 a reproduction check failed, 2 bad input,
3 some knot came out UNDETERMINED (no two-bridge knot should, so this
points at a bug).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Any, Sequence

from .errors import InputError, TwoBridgeError
from .obstructions import cosmetic_verdict
from .rational import ContinuedFraction, TwoBridgeKnot, mirror, normalize
from .report import (
    SCHEMA_VERSION,
    full_report,
    invariants_json,
    knot_json,
    poly_from_json,
    rational_str,
    slopes_json,
    verdict_json,
)
from .scan import ScanConfig, iter_reports, summarize
from .slopes import parse_slope, casson_difference, slope_records
from . import verify

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_UNDETERMINED = 0, 1, 2, 3

_FRACTION = re.compile(r"^\s*(-?\d+)\s*/\s*(-?\d+)\s*$")


class CLIError(InputError):
    pass


def parse_fraction(text: str) -> tuple[int, int]:
    """'p/q' -> (p, q) without reducing, so 4/2 is reported as not a knot."""
    m = _FRACTION.match(text)
    if not m:
        raise CLIError(f"expected p/q, got {text!r}")
    return int(m.group(1)), int(m.group(2))


def parse_terms(text: str) -> tuple[int, ...]:
    try:
        terms = tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise CLIError(f"expected comma-separated integers, got {text!r}") from None
    if not terms:
        raise CLIError("empty continued fraction")
    return terms


def knot_from_args(args) -> TwoBridgeKnot:
    if args.fraction is not None:
        K = normalize(*parse_fraction(args.fraction))
    else:
        K = TwoBridgeKnot.from_cf(ContinuedFraction(parse_terms(args.cf)))
    return mirror(K) if args.mirror else K


def _header(K: TwoBridgeKnot) -> dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "knot": knot_json(K)}


# ---------------------------------------------------------------- text output


def _poly_text(pairs, var: str) -> str:
    return poly_from_json(pairs).format(var)


def _text(report: dict[str, Any]) -> str:
    lines = []
    k = report["knot"]
    lines.append(f"knot b({k['p']},{k['q']}) {k['chirality']} even_cf={k['even_cf']}")
    inv = report.get("invariants")
    if inv:
        lines.append(f"alexander   {_poly_text(inv['alexander'], 't')}")
        lines.append(f"conway      {_poly_text(inv['conway'], 'z')}")
        lines.append(f"jones       {_poly_text(inv['jones'], 't')}")
        for key in ("signature", "genus", "determinant", "fibered", "amphichiral"):
            lines.append(f"{key:<11} {inv[key]}")
    if "slopes" in report:
        lines.append("expansion                          n+  n-     N  W")
        for r in report["slopes"]:
            lines.append(f"{str(r['expansion']):<34} {r['n_plus']:>3} {r['n_minus']:>3} {r['slope']:>5}  {r['weight']}")
        lines.append(f"S+ = {report['s_plus']}  S- = {report['s_minus']}")
    for slope, value in report.get("casson", {}).items():
        lines.append(f"casson difference at {slope}: {value}")
    v = report.get("verdict")
    if v:
        lines.append(f"verdict {v['verdict']} (stage {v['stage']})")
        for s in v["stages"]:
            lines.append(f"  {s['name']:<12} {s['outcome']:<15} {json.dumps(s['witness'])}")
    return "\n".join(lines)


def _emit(obj: dict[str, Any], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(obj) + "\n")
    else:
        out.write(_text(obj) + "\n")


# ---------------------------------------------------------------- commands


def cmd_invariants(args, out) -> int:
    K = knot_from_args(args)
    _emit({**_header(K), "invariants": invariants_json(K)}, args.format, out)
    return EXIT_OK


def cmd_slopes(args, out) -> int:
    K = knot_from_args(args)
    s = slope_records(K)
    _emit({**_header(K), "slopes": slopes_json(s), "s_plus": str(s.s_plus), "s_minus": str(s.s_minus)},
          args.format, out)
    return EXIT_OK


def cmd_casson(args, out) -> int:
    K = knot_from_args(args)
    p, q = parse_slope(args.slope)
    value = casson_difference(K, (p, q))
    _emit({**_header(K), "casson": {rational_str(Fraction(p, q)): rational_str(value)}}, args.format, out)
    return EXIT_OK


def cmd_cosmetic(args, out) -> int:
    K = knot_from_args(args)
    r = cosmetic_verdict(K, full=args.full)
    _emit({**_header(K), "verdict": verdict_json(r)}, args.format, out)
    return EXIT_UNDETERMINED if r.verdict.value == "UNDETERMINED" else EXIT_OK


def cmd_report(args, out) -> int:
    K = knot_from_args(args)
    rep = full_report(K, full_gates=args.full)
    _emit(rep, args.format, out)
    return EXIT_UNDETERMINED if rep["verdict"]["verdict"] == "UNDETERMINED" else EXIT_OK


def cmd_scan(args, out) -> int:
    try:
        cfg = ScanConfig(max_p=args.max_p, jobs=args.jobs)
    except ValueError as exc:
        raise CLIError(str(exc)) from None
    reports = []
    for rep in iter_reports(cfg):
        reports.append(rep)
        if args.format == "json":
            out.write(json.dumps(rep) + "\n")
        else:
            k, v = rep["knot"], rep["verdict"]
            out.write(f"b({k['p']},{k['q']}) {v['verdict']} {v['stage']}\n")
    summary = summarize(reports)
    out.write(json.dumps({"summary": summary}) + "\n")
    return EXIT_UNDETERMINED if summary["undetermined"] else EXIT_OK


def _family_arg(text: str) -> int:
    m = re.fullmatch(r"\s*(?:n\s*=\s*)?(\d+)\s*", text)
    if not m or int(m.group(1)) < 1:
        raise argparse.ArgumentTypeError(f"expected n=<positive integer>, got {text!r}")
    return int(m.group(1))


def cmd_verify(args, out) -> int:
    checks: list[verify.Check] = []
    selected = False
    if args.case:
        selected = True
        checks += verify.case_checks(args.case, args.x, args.y)
    if args.family is not None:
        selected = True
        checks += verify.family_checks(args.family) + verify.ito_checks(args.family)
    if args.sig_grid:
        selected = True
        checks += verify.signature_checks()
    if args.closed_form:
        selected = True
        checks += verify.closed_form_checks()
    if args.generators:
        selected = True
        checks += verify.generator_checks()
    if args.all or not selected:
        checks = verify.all_checks()
    failed = [c for c in checks if not c.ok]
    if args.format == "json":
        payload = {
            "checks": [{"suite": c.suite, "name": c.name, "ok": c.ok, "detail": c.detail} for c in checks],
            "passed": len(checks) - len(failed),
            "failed": len(failed),
        }
        out.write(json.dumps(payload) + "\n")
    else:
        for c in checks:
            out.write(c.line() + "\n")
        out.write(f"{len(checks) - len(failed)} passed, {len(failed)} failed\n")
    return EXIT_MISMATCH if failed else EXIT_OK


# ---------------------------------------------------------------- parser


def _add_knot_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--fraction", help="p/q, the knot b(p, q)")
    g.add_argument("--cf", help="comma-separated continued fraction a1,a2,... (1/(a1 + 1/(a2 + ...)))")
    p.add_argument("--mirror", action="store_true", help="take the mirror image")


def _add_format(p: argparse.ArgumentParser, default: str = "json") -> None:
    p.add_argument("--format", choices=("json", "text"), default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twobridge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (
        ("invariants", cmd_invariants, "Alexander, Conway, Jones, signature, genus, determinant"),
        ("slopes", cmd_slopes, "boundary-slope records and S+/S-"),
        ("cosmetic", cmd_cosmetic, "run the obstruction gates"),
        ("report", cmd_report, "full JSON report"),
    ):
        p = sub.add_parser(name, help=help_)
        _add_knot_args(p)
        _add_format(p)
        if name in ("cosmetic", "report"):
            p.add_argument("--full", action="store_true", help="run every gate instead of stopping at the first exclusion")
        p.set_defaults(func=fn)

    p = sub.add_parser("casson", help="Casson difference lambda(K(r)) - lambda(K(-r))")
    _add_knot_args(p)
    _add_format(p)
    p.add_argument("--slope", required=True, help="p/q")
    p.set_defaults(func=cmd_casson)

    p = sub.add_parser("scan", help="every knot class with p <= N")
    p.add_argument("--max-p", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    _add_format(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify-paper", help="reproduction suites")
    _add_format(p, default="text")
    p.add_argument("--all", action="store_true")
    p.add_argument("--case", help="case id such as 1-5")
    p.add_argument("--x", type=int)
    p.add_argument("--y", type=int)
    p.add_argument("--family", type=_family_arg, metavar="n=N")
    p.add_argument("--sig-grid", action="store_true")
    p.add_argument("--closed-form", action="store_true")
    p.add_argument("--generators", "--section3", dest="generators", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (InputError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        err.write(f"error: {msg}\n")
        return EXIT_INPUT
    except TwoBridgeError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
