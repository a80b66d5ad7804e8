"""Command-line front end.

Subcommands: table, seq, poly, gf, verify, dobinski.  Output formats are
text (default), json, and csv (triangles and sequences only).  The default
format can also be set through the LAHBELL_FORMAT environment variable.

Exit codes: 0 on success, 1 when `verify` finds a failing identity (or a
certified evaluation cannot reach the requested precision), 2 on usage
errors.  Nothing is written to stderr on success.

JSON payloads are canonical: keys sorted, no whitespace, exact values
rendered as integers or "p/q" strings, never floats.  The same input always
produces byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .dobinski import (
    DOBINSKI_FAMILIES,
    PrecisionNotReached,
    bell_dobinski,
    lah_bell_dobinski,
)
from .families import FAMILIES, poly_family
from .identities import oracle_records, run_suite
from .series import GF_NAMES, gf_catalog
from .triangles import (
    bell_number,
    lah,
    lah_bell_number,
    stirling1_signed,
    stirling2,
)

__all__ = ["main"]

_FORMATS = ("text", "json", "csv")
_TABLE_KINDS = {"lah": lah, "s1": stirling1_signed, "s2": stirling2}
_SEQ_KINDS = {"bell": bell_number, "lah_bell": lah_bell_number}


def _canonical_json(payload: object) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _csv_lines(rows: list[list[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def _resolve_format(parser: argparse.ArgumentParser, args: argparse.Namespace) -> str:
    fmt = args.format or os.environ.get("LAHBELL_FORMAT") or "text"
    if fmt not in _FORMATS:
        parser.error(f"unknown output format {fmt!r}, expected one of {_FORMATS}")
    if fmt == "csv" and args.command not in ("table", "seq"):
        parser.error("csv output is only available for the table and seq commands")
    return fmt


def _nonneg(parser: argparse.ArgumentParser, value: int, name: str) -> int:
    if value < 0:
        parser.error(f"{name} must be nonnegative, got {value}")
    return value


def _fraction_arg(parser: argparse.ArgumentParser, text: str, name: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        parser.error(f"{name} must be an exact number like 3, 1/2 or 1e-20, got {text!r}")
    raise AssertionError("unreachable")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lahbell",
        description=(
            "Exact combinatorial triangles, polynomial families, generating "
            "functions, identity verification and certified series evaluation."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format",
            choices=_FORMATS,
            default=None,
            help="output format (default: $LAHBELL_FORMAT or text)",
        )

    p_table = sub.add_parser("table", help="rows 0..nmax of a number triangle")
    p_table.add_argument("kind", choices=sorted(_TABLE_KINDS))
    p_table.add_argument("nmax", type=int)
    add_format(p_table)

    p_seq = sub.add_parser("seq", help="terms 0..nmax of a row-sum sequence")
    p_seq.add_argument("kind", choices=sorted(_SEQ_KINDS))
    p_seq.add_argument("nmax", type=int)
    add_format(p_seq)

    p_poly = sub.add_parser("poly", help="one polynomial family member, exactly")
    p_poly.add_argument("family", choices=FAMILIES)
    p_poly.add_argument("n", type=int)
    add_format(p_poly)

    p_gf = sub.add_parser("gf", help="egf coefficients of a catalog generating function")
    p_gf.add_argument("name", choices=GF_NAMES)
    p_gf.add_argument("--order", type=int, default=32, help="truncation order (default 32)")
    add_format(p_gf)

    p_verify = sub.add_parser("verify", help="run identity checks; exit 1 on any failure")
    p_verify.add_argument("ids", nargs="*", default=["all"], help='identity ids, or "all"')
    p_verify.add_argument("--max-n", type=int, default=12, dest="max_n")
    p_verify.add_argument(
        "--oracle",
        action="store_true",
        help="also compare triangles against brute-force enumeration",
    )
    add_format(p_verify)

    p_dob = sub.add_parser("dobinski", help="certified evaluation of a series formula")
    p_dob.add_argument("--family", choices=DOBINSKI_FAMILIES, default="lah_bell")
    p_dob.add_argument("--n", type=int, required=True)
    p_dob.add_argument("--x", required=True, help="positive rational, e.g. 1/2")
    p_dob.add_argument("--eps", default="1e-20", help="absolute error target (default 1e-20)")
    add_format(p_dob)

    return parser


def _emit(fmt: str, text: str, payload: object, csv_rows: list[list[object]] | None = None) -> None:
    if fmt == "json":
        print(_canonical_json(payload))
    elif fmt == "csv":
        assert csv_rows is not None
        print(_csv_lines(csv_rows))
    else:
        print(text)


def _cmd_table(parser: argparse.ArgumentParser, args: argparse.Namespace, fmt: str) -> int:
    nmax = _nonneg(parser, args.nmax, "nmax")
    value = _TABLE_KINDS[args.kind]
    rows = [[value(n, k) for k in range(n + 1)] for n in range(nmax + 1)]
    text = "\n".join(" ".join(str(v) for v in row) for row in rows)
    payload = {"command": "table", "kind": args.kind, "nmax": nmax, "rows": rows}
    _emit(fmt, text, payload, csv_rows=rows)
    return 0


def _cmd_seq(parser: argparse.ArgumentParser, args: argparse.Namespace, fmt: str) -> int:
    nmax = _nonneg(parser, args.nmax, "nmax")
    value = _SEQ_KINDS[args.kind]
    values = [value(n) for n in range(nmax + 1)]
    text = " ".join(str(v) for v in values)
    payload = {"command": "seq", "kind": args.kind, "nmax": nmax, "values": values}
    csv_rows: list[list[object]] = [["n", "value"]]
    csv_rows.extend([n, v] for n, v in enumerate(values))
    _emit(fmt, text, payload, csv_rows=csv_rows)
    return 0


def _cmd_poly(parser: argparse.ArgumentParser, args: argparse.Namespace, fmt: str) -> int:
    n = _nonneg(parser, args.n, "n")
    rendered = str(poly_family(args.family, n))
    payload = {"command": "poly", "family": args.family, "n": n, "value": rendered}
    _emit(fmt, rendered, payload)
    return 0


def _cmd_gf(parser: argparse.ArgumentParser, args: argparse.Namespace, fmt: str) -> int:
    order = _nonneg(parser, args.order, "order")
    series = gf_catalog(args.name, order)
    coefficients = [str(series.egf_coefficient(n)) for n in range(order + 1)]
    text = "\n".join(f"{n}: {c}" for n, c in enumerate(coefficients))
    payload = {
        "command": "gf",
        "name": args.name,
        "order": order,
        "egf_coefficients": coefficients,
    }
    _emit(fmt, text, payload)
    return 0


def _cmd_verify(parser: argparse.ArgumentParser, args: argparse.Namespace, fmt: str) -> int:
    if args.max_n < 1:
        parser.error(f"--max-n must be at least 1, got {args.max_n}")
    try:
        records = run_suite(args.ids, args.max_n)
    except ValueError as exc:
        parser.error(str(exc))
    if args.oracle:
        records.extend(oracle_records(args.max_n))
    lines = []
    for record in records:
        if record.passed():
            lines.append(f"{record.id}: pass ({record.range})")
        else:
            lines.append(
                f"{record.id}: FAIL ({record.range}) counterexample: "
                + _canonical_json(record.counterexample)
            )
    payload = [record.to_json() for record in records]
    _emit(fmt, "\n".join(lines), payload)
    return 0 if all(record.passed() for record in records) else 1


def _cmd_dobinski(parser: argparse.ArgumentParser, args: argparse.Namespace, fmt: str) -> int:
    n = _nonneg(parser, args.n, "--n")
    x = _fraction_arg(parser, args.x, "--x")
    eps = _fraction_arg(parser, args.eps, "--eps")
    if x <= 0:
        parser.error(f"--x must be positive, got {args.x}")
    if eps <= 0:
        parser.error(f"--eps must be positive, got {args.eps}")
    evaluator = lah_bell_dobinski if args.family == "lah_bell" else bell_dobinski
    try:
        result = evaluator(n, x, eps)
    except PrecisionNotReached as exc:
        print(f"precision not reached: {exc}", file=sys.stderr)
        return 1
    payload = {
        "command": "dobinski",
        "family": args.family,
        "n": n,
        "x": str(x),
        "eps": str(eps),
        "value_decimal": result.decimal(),
        "error_bound": result.error_bound_decimal(),
        "series_terms": result.series_terms,
        "exp_terms": result.exp_terms,
    }
    text = "\n".join(
        [
            f"value: {result.decimal()}",
            f"error_bound: {result.error_bound_decimal()}",
            f"series_terms: {result.series_terms}",
            f"exp_terms: {result.exp_terms}",
        ]
    )
    _emit(fmt, text, payload)
    return 0


_HANDLERS = {
    "table": _cmd_table,
    "seq": _cmd_seq,
    "poly": _cmd_poly,
    "gf": _cmd_gf,
    "verify": _cmd_verify,
    "dobinski": _cmd_dobinski,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    fmt = _resolve_format(parser, args)
    return _HANDLERS[args.command](parser, args, fmt)


if __name__ == "__main__":
    sys.exit(main())
