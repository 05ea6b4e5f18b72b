"""Command line: ``qeuler compute | table | verify``.

Exit codes: 0 success, 1 verification or golden-file mismatch, 2 usage or
domain error. Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import engine, powerseries, verify
from .qcalc import ArgSpec, DomainError, as_fraction

FAMILIES = (
    "euler_q",
    "euler_q_poly",
    "genocchi_q_poly",
    "euler_hq_poly",
    "euler_hq_special",
    "genocchi_hq_poly",
    "cos_genocchi",
)
NEEDS_H = {"euler_hq_poly", "genocchi_hq_poly", "cos_genocchi"}
USES_X = {"euler_q_poly", "genocchi_q_poly", "euler_hq_poly", "euler_hq_special", "genocchi_hq_poly"}
FIELDS = ("n", "r", "h", "w", "q", "x", "u")


class UsageError(Exception):
    pass


def fmt(value: Fraction) -> str:
    """Canonical exact form: ``a/b`` in lowest terms, or ``a`` when b = 1."""
    return str(Fraction(value))


def evaluate(family: str, n: int, r: int, h: Optional[int], w: Fraction, x: ArgSpec) -> Fraction:
    if family in NEEDS_H and h is None:
        raise UsageError(f"--h is required for family {family}")
    if family == "euler_q":
        return engine.euler_q(n, r, w, x.q)
    if family == "euler_q_poly":
        return engine.euler_q_poly(n, r, w, x)
    if family == "genocchi_q_poly":
        return engine.genocchi_q_poly(n, r, w, x)
    if family == "euler_hq_poly":
        return engine.euler_hq_poly(n, r, h, w, x)
    if family == "euler_hq_special":
        return engine.euler_hq_special(n, r, w, x)
    if family == "genocchi_hq_poly":
        return engine.genocchi_hq_poly(n, r, h, w, x)
    if family == "cos_genocchi":
        return powerseries.cos_generating_coeffs(h, r, x.q, n)[n]
    raise UsageError(f"unknown family {family!r}")


def record(family, n, r, h, w, x: ArgSpec, value) -> dict:
    params = {
        "n": n,
        "r": r,
        "h": h,
        "w": fmt(w) if family != "cos_genocchi" else None,
        "q": fmt(x.q),
        "x": (fmt(x.x) if x.d == 1 else f"{x.s}/{x.d}") if family in USES_X else None,
        "u": fmt(x.u) if x.d > 1 and family in USES_X else None,
    }
    return {"family": family, "params": params, "value": fmt(value)}


def _decimal(value: str, places: int) -> str:
    return f"{float(Fraction(value)):.{places}f}"


def render(records: list[dict], fmt_name: str, decimal: Optional[int]) -> str:
    if fmt_name == "value":
        return "".join(
            rec["value"] + (f"\t~{_decimal(rec['value'], decimal)}" if decimal is not None else "") + "\n"
            for rec in records
        )
    if fmt_name == "json":
        out = []
        for rec in records:
            rec = dict(rec)
            if decimal is not None:
                rec["decimal_approx"] = _decimal(rec["value"], decimal)
            out.append(rec)
        return json.dumps(out, indent=2) + "\n"
    buf = io.StringIO()
    header = ["family", *FIELDS, "value"] + (["decimal_approx"] if decimal is not None else [])
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for rec in records:
        row = [rec["family"]] + ["" if rec["params"][f] is None else rec["params"][f] for f in FIELDS]
        row.append(rec["value"])
        if decimal is not None:
            row.append(_decimal(rec["value"], decimal))
        writer.writerow(row)
    return buf.getvalue()


def _parse_index_range(text: str) -> list[int]:
    """``5`` or ``0:5`` (inclusive)."""
    if ":" in text:
        a, b = text.split(":", 1)
        return list(range(int(a), int(b) + 1))
    return [int(text)]


def _parse_list(text: Optional[str], conv) -> list:
    if text is None or text.strip() == "":
        return []
    return [conv(t) for t in text.split(",") if t.strip() != ""]


def _int_list(text: Optional[str]) -> list[int]:
    out = []
    for t in _parse_list(text, str):
        out.extend(_parse_index_range(t))
    return out


def _rational(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not an exact rational: {text!r}") from exc


def _arg_from_flags(args) -> ArgSpec:
    if args.u is not None:
        if args.q is not None:
            raise UsageError("give either --q or --u/--d/--s, not both")
        return ArgSpec(args.s or 0, args.d or 1, _rational(args.u))
    if args.q is None:
        raise UsageError("--q (or --u with --d and --s) is required")
    return ArgSpec.integer(args.x or 0, _rational(args.q))


def _emit(text: str, golden: Optional[str]) -> int:
    sys.stdout.write(text)
    if golden is not None:
        expected = Path(golden).read_bytes()
        if expected != text.encode("utf-8"):
            print(f"golden mismatch against {golden}", file=sys.stderr)
            return 1
    return 0


def cmd_compute(args) -> int:
    x = _arg_from_flags(args)
    w = _rational(args.w) if args.w is not None else Fraction(1)
    records = []
    for n in _parse_index_range(args.n):
        records.append(record(args.family, n, args.r, args.h, w, x, evaluate(args.family, n, args.r, args.h, w, x)))
    return _emit(render(records, args.format, args.decimal), args.golden)


def cmd_table(args) -> int:
    families = args.family or []
    ns = list(range(args.n_max + 1))
    rs = _int_list(args.r)
    hs = _int_list(args.h)
    ws = _parse_list(args.w, _rational)
    qs = _parse_list(args.q, _rational)
    xs = _int_list(args.x) or [0]
    rows = []
    # compute every row before printing anything (fail fast, no partial output)
    for family in families:
        for n in ns:
            for r in rs:
                for h in (hs if family in NEEDS_H else [None]):
                    for w in (ws if family != "cos_genocchi" else [Fraction(1)]):
                        for q in qs:
                            for xv in (xs if family in USES_X else [0]):
                                arg = ArgSpec.integer(xv, q)
                                val = evaluate(family, n, r, h, w, arg)
                                rows.append(((family, n, r, -10**9 if h is None else h), record(family, n, r, h, w, arg, val)))
    rows.sort(key=lambda kv: kv[0])
    fmt_name = args.format if args.format != "value" else "csv"
    return _emit(render([rec for _, rec in rows], fmt_name, args.decimal), args.golden)


def cmd_verify(args) -> int:
    start = time.perf_counter()
    cases = verify.run(args.suite, args.grid)
    lines = [c.line() for c in cases if args.verbose or not c.passed or not c.fatal or c.label == "resolution"]
    failed = [c for c in cases if c.fatal and not c.passed]
    passed = sum(c.passed for c in cases)
    for line in lines:
        print(line)
    elapsed = time.perf_counter() - start
    print(f"{args.suite} ({args.grid}): {passed}/{len(cases)} cases passed, {len(failed)} failed")
    print(f"elapsed {elapsed:.2f}s", file=sys.stderr)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qeuler",
        description="Exact q- and (h,q)-extensions of w-Euler and w-Genocchi numbers.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common_output(p):
        p.add_argument("--format", choices=("value", "json", "csv"), default="value")
        p.add_argument("--decimal", type=int, metavar="K", help="add an approximate decimal column with K places")
        p.add_argument("--golden", metavar="PATH", help="compare stdout bytes against this file")

    c = sub.add_parser("compute", help="compute values of one family")
    c.add_argument("--family", choices=FAMILIES, required=True)
    c.add_argument("--n", required=True, help="index, or inclusive range A:B")
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--h", type=int)
    c.add_argument("--w", help="twist (rational a/b); default 1")
    c.add_argument("--q", help="q (rational a/b)")
    c.add_argument("--x", type=int, help="integer argument x")
    c.add_argument("--u", help="d-th root of q for a fractional argument")
    c.add_argument("--d", type=int, help="denominator of x = s/d (with --u)")
    c.add_argument("--s", type=int, help="numerator of x = s/d (with --u)")
    common_output(c)
    c.set_defaults(func=cmd_compute)

    t = sub.add_parser("table", help="emit a grid of values")
    t.add_argument("--family", choices=FAMILIES, action="append")
    t.add_argument("--n-max", type=int, required=True)
    t.add_argument("--r", default="1", help="comma list / ranges, e.g. 1,2 or 1:3")
    t.add_argument("--h", default="", help="comma list for (h,q) families")
    t.add_argument("--w", default="1")
    t.add_argument("--q", default="")
    t.add_argument("--x", default="0")
    common_output(t)
    t.set_defaults(func=cmd_table, format="csv")

    v = sub.add_parser("verify", help="run an identity suite")
    v.add_argument("suite", choices=(*verify.SUITES, "all"))
    v.add_argument("--grid", choices=("small", "full"), default="small")
    v.add_argument("-v", "--verbose", action="store_true", help="print passing cases too")
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (UsageError, DomainError, ZeroDivisionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
