"""Command-line entry point.

Exit codes: 0 success / all checks pass, 1 a verification failed, 2 usage or
input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .closedforms import invert_z_k, secant_table
from .errors import EquivarianceLeak, NotLaurent, TautError
from .localization import load_fixture, p1_bundle
from .report import render
from .suite import CHECKS, run_check
from .tautseries import chern_generating_series, extract_universal_coeffs, universal_series

ORDER_RANGE = (1, 20)
RANK_RANGE = (1, 8)
VERIFY_ORDER_RANGE = (1, 12)
SIGNS = {"plus": 1, "minus": -1}


class UsageFailure(Exception):
    pass


def _bounded(lo: int, hi: int, what: str):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{what} must be an integer, got {text!r}")
        if not lo <= value <= hi:
            raise argparse.ArgumentTypeError(f"{what} must lie in [{lo}, {hi}], got {value}")
        return value
    return parse


def _degrees(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tautcurve",
        description="Tautological integrals on symmetric products of curves.")
    parser.add_argument("--version", action="version", version=f"tautcurve {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    order = _bounded(*ORDER_RANGE, "order")
    rank = _bounded(*RANK_RANGE, "rank")

    def common(p, default_order=8, order_type=order):
        p.add_argument("--order", type=order_type, default=default_order)
        p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")

    p = sub.add_parser("series", help="generating series of Chern/Segre numbers")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--fixture", metavar="FILE", help="fixture JSON document")
    src.add_argument("--p1-degrees", type=_degrees, metavar="D1,D2,...",
                     help="direct sum of O(d_i) on P^1")
    p.add_argument("--sign", choices=SIGNS, required=True)
    common(p)

    p = sub.add_parser("coeffs", help="universal coefficients A,B (plus) or C,D (minus)")
    p.add_argument("--rank", type=rank, required=True)
    p.add_argument("--sign", choices=SIGNS, required=True)
    common(p)

    p = sub.add_parser("universal", help="universal series for degree d and genus g")
    p.add_argument("--rank", type=rank, required=True)
    p.add_argument("--sign", choices=SIGNS, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--genus", type=_bounded(0, 10 ** 6, "genus"), required=True)
    common(p)

    p = sub.add_parser("invert", help="k(z) with z = k(1-k)^r")
    p.add_argument("--r", type=_bounded(0, 20, "r"), required=True)
    common(p)

    p = sub.add_parser("secant", help="n-secant (n-2)-plane counts")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--genus", type=_bounded(0, 10 ** 6, "genus"), required=True)
    common(p)

    p = sub.add_parser("verify", help="run a named check or all of them")
    p.add_argument("check", choices=sorted(CHECKS) + ["all"])
    common(p, order_type=_bounded(*VERIFY_ORDER_RANGE, "order"))
    return parser


# output ---------------------------------------------------------------------

def _document(command: str, passed: bool, **body) -> dict:
    return {"version": __version__, "command": command, "pass": passed, **body}


def _dump(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


def _emit_table(rows: list[tuple], header: Sequence[str], fmt: str, command: str) -> str:
    if fmt == "csv":
        lines = [",".join(header)] + [",".join(render(v) for v in row) for row in rows]
        return "\n".join(lines)
    if fmt == "json":
        table = [{h: (v if h == "n" else render(v)) for h, v in zip(header, row)}
                 for row in rows]
        return _dump(_document(command, True, table=table))
    if len(header) == 2:
        return ", ".join(render(row[1]) for row in rows)
    return "\n".join(f"{h}: " + ", ".join(render(row[i]) for row in rows)
                     for i, h in enumerate(header) if i > 0)


def _emit_reports(reports, fmt: str, command: str) -> str:
    passed = all(r.passed for r in reports)
    if fmt == "json":
        return _dump(_document(command, passed, checks=[r.to_dict() for r in reports]))
    if fmt == "csv":
        lines = ["name,pass,order,witness_index,lhs,rhs"]
        for r in reports:
            w = r.witness
            cells = [r.name, str(r.passed).lower(), str(r.order)]
            cells += ["", "", ""] if w is None else [str(w.index), w.lhs, w.rhs]
            lines.append(",".join(f'"{c}"' if "," in c else c for c in cells))
        return "\n".join(lines)
    lines = [r.summary() for r in reports]
    for r in reports:
        notes = r.to_dict()["notes"]
        if notes:
            lines.append(f"  {r.name}: {notes}")
    lines.append(f"overall: {'PASS' if passed else 'FAIL'}")
    return "\n".join(lines)


# commands -------------------------------------------------------------------

def _run(args, command: str) -> tuple[int, str]:
    fmt = args.format
    if args.command == "series":
        if args.fixture:
            try:
                fixture = load_fixture(args.fixture)
            except OSError as exc:
                raise UsageFailure(f"cannot read fixture {args.fixture}: {exc.strerror}")
            except TautError as exc:
                raise UsageFailure(f"invalid fixture {args.fixture}: {exc}")
            if not fixture.compact:
                raise UsageFailure(f"fixture {fixture.name!r} is not compact")
        else:
            if not args.p1_degrees:
                raise UsageFailure("--p1-degrees needs at least one degree")
            if len(args.p1_degrees) > RANK_RANGE[1]:
                raise UsageFailure(f"rank must lie in {list(RANK_RANGE)}")
            fixture = p1_bundle(args.p1_degrees)
        s = chern_generating_series(fixture, SIGNS[args.sign], args.order)
        return 0, _emit_table(list(enumerate(s.coeffs)), ("n", "value"), fmt, command)

    if args.command == "coeffs":
        c = extract_universal_coeffs(args.rank, SIGNS[args.sign], args.order)
        rows = [(n, c.first[n - 1], c.second[n - 1]) for n in range(1, args.order + 1)]
        return 0, _emit_table(rows, ("n",) + c.names, fmt, command)

    if args.command == "universal":
        c = extract_universal_coeffs(args.rank, SIGNS[args.sign], args.order)
        s = universal_series(c, args.degree, 2 - 2 * args.genus, args.order)
        return 0, _emit_table(list(enumerate(s.coeffs)), ("n", "value"), fmt, command)

    if args.command == "invert":
        k = invert_z_k(args.r, args.order)
        return 0, _emit_table(list(enumerate(k.coeffs)), ("n", "value"), fmt, command)

    if args.command == "secant":
        rows = secant_table(args.degree, args.genus, args.order)
        return 0, _emit_table(rows, ("n", "value"), fmt, command)

    if args.command == "verify":
        names = sorted(CHECKS) if args.check == "all" else [args.check]
        reports = [run_check(name, args.order) for name in names]
        passed = all(r.passed for r in reports)
        return (0 if passed else 1), _emit_reports(reports, fmt, command)

    raise UsageFailure(f"unknown command {args.command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    command = " ".join(argv)
    try:
        code, text = _run(args, command)
    except UsageFailure as exc:
        print(f"tautcurve: error: {exc}", file=sys.stderr)
        return 2
    except (EquivarianceLeak, NotLaurent) as exc:
        print(f"tautcurve: verification failure: {exc}", file=sys.stderr)
        return 1
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
