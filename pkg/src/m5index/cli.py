"""Command-line entry point: ``m5index expand | verify | table | golden``.

Exit codes: 0 success, 1 a failing check or comparison, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import List, Optional

from . import formulas as F
from .golden import check_golden, write_golden
from .render import render_series, series_to_json
from .series import NonLatticeImage, SeriesError, TruncatedSeries
from .tables import MissingFixture, render_level
from .verify import SUITES, X_DEGREE, brief, imamura_rows, kim_rows, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_order(text: str) -> Fraction:
    try:
        o = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"order must be an integer or half-integer, got {text!r}") from None
    if (2 * o).denominator != 1 or o < 0:
        raise argparse.ArgumentTypeError(f"order must be a non-negative integer or half-integer, got {text!r}")
    return o


def expand_theory(theory: str, order) -> TruncatedSeries:
    """``A{n}`` (reduced, sl(n+1)), ``gl{n}``, ``sugra`` or ``minimal{n}``."""
    m = re.fullmatch(r"(A|gl|minimal)(\d+)|sugra", theory)
    if not m:
        raise UsageError(f"unknown theory {theory!r}; use A<n>, gl<n>, sugra or minimal<n>")
    if theory == "sugra":
        return F.index_sugra(order)
    kind, n = m.group(1), int(m.group(2))
    if kind == "A":
        if n < 1:
            raise UsageError("A<n> needs n >= 1")
        return F.index_chi(F.TheorySpec(n + 1, reduced=True), order)
    if n < 1:
        raise UsageError(f"{kind}<n> needs n >= 1")
    if kind == "gl":
        return F.index_chi(F.TheorySpec(n), order)
    return F.minimal_index(n, order)


def cmd_expand(args) -> int:
    s = expand_theory(args.theory, args.order)
    try:
        text = series_to_json(s, args.frame) if args.format == "json" else render_series(s, args.frame)
    except NonLatticeImage as exc:
        raise UsageError(f"the series cannot be written in the {args.frame} frame: {exc}") from None
    print(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    rep = run_suite(args.suite, order=args.order, jobs=args.jobs, fixtures=args.fixtures)
    sys.stdout.write(rep.to_json() if args.format == "json" else rep.to_text())
    return EXIT_OK if rep.passed else EXIT_FAIL


def _table_rows(args) -> List[dict]:
    limit2 = None if args.order is None else int(2 * args.order)
    rows = []
    if args.comparison == "kim":
        if args.frame != "y":
            raise UsageError("the kim comparison is printed in the y frame")
        for name, q2, printed, ours, _ref in kim_rows(args.fixtures):
            if limit2 is not None and q2 > limit2:
                continue
            match = {k: v for k, v in printed.items() if v} == {k: v for k, v in ours.items() if v}
            rows.append({"series": name, "q": str(Fraction(q2, 2)), "ours": render_level(ours, "y"),
                         "printed": render_level(printed, "y"), "match": match})
        return rows
    if args.frame != "x":
        raise UsageError("the imamura comparison is printed in the x frame")
    for name, q2, ab, printed, ours, _ref in imamura_rows(args.fixtures):
        if limit2 is not None and q2 > limit2:
            continue
        want = printed.series(X_DEGREE) if printed is not None else {}
        got = {j: c for j, c in ours.items() if c}
        rows.append({"series": name, "q": str(Fraction(q2, 2)), "char": f"chi[{ab[0]},{ab[1]}]",
                     "ours": brief(render_level({(j, (0, 0)): c for j, c in got.items()}, "x")) + f"+O(x^{X_DEGREE})",
                     "printed": printed.render() if printed is not None else "0", "match": want == got})
    return rows


def cmd_table(args) -> int:
    args.frame = args.frame or ("y" if args.comparison == "kim" else "x")
    rows = _table_rows(args)
    if args.format == "json":
        print(json.dumps({"comparison": args.comparison, "frame": args.frame, "rows": rows}, indent=1))
    else:
        for r in rows:
            char = f" {r['char']}" if "char" in r else ""
            flag = "match" if r["match"] else "MISMATCH"
            print(f"{r['series']} q^{r['q']}{char}: ours={r['ours']} printed={r['printed']} {flag}")
    return EXIT_OK if all(r["match"] for r in rows) else EXIT_FAIL


def cmd_golden(args) -> int:
    if args.write:
        for p in write_golden(args.fixtures):
            print(f"wrote {p}")
        return EXIT_OK
    ok = True
    for name, same, _stored, _fresh in check_golden(args.fixtures):
        print(f"{name} {'ok' if same else 'CHANGED'}")
        ok &= same
    return EXIT_OK if ok else EXIT_FAIL


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="m5index", description="Exact expansions of 6d (2,0) superconformal indices.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("expand", help="expand the index of a theory")
    e.add_argument("--theory", required=True, help="A<n>, gl<n>, sugra or minimal<n>")
    e.add_argument("--order", type=parse_order, default=Fraction(4), help="exclusive q-order (default 4)")
    e.add_argument("--frame", choices=("y", "t", "x", "zw"), default="y")
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.set_defaults(func=cmd_expand)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--order", type=parse_order, default=None, help="override the suite's default order")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--fixtures", default=None, help="directory holding the comparison fixtures")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="side-by-side comparison with a printed expansion")
    t.add_argument("comparison", choices=("kim", "imamura"))
    t.add_argument("--order", type=parse_order, default=None, help="show rows up to this q-power")
    t.add_argument("--frame", choices=("y", "t", "x", "zw"), default=None)
    t.add_argument("--format", choices=("text", "json"), default="text")
    t.add_argument("--fixtures", default=None)
    t.set_defaults(func=cmd_table)

    g = sub.add_parser("golden", help="check or regenerate the stored golden expansions")
    g.add_argument("--write", action="store_true")
    g.add_argument("--fixtures", default=None)
    g.set_defaults(func=cmd_golden)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be at least 1")
        return args.func(args)
    except UsageError as exc:
        print(f"m5index: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MissingFixture as exc:
        print(f"m5index: missing fixture: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SeriesError as exc:
        print(f"m5index: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
