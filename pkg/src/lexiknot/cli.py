"""Command line interface: enumerate, mc, reduce, curve, table."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .arith import DegenerateFractionError, parse_fraction, record_for_fraction
from .curvelab import (
    EmbeddingError,
    NonNodalError,
    NotTrigonalError,
    PlaneCurve,
    Polynomial,
    chebyshev,
    curve_crossings,
    verify_embedding,
    word_from_curve,
)
from .enumeration import diagram_summary, enumerate_simple_diagrams, m_C
from .planereduce import PlaneWord, b_lower_bound, reduction_search
from .report import build_table, diff_expected, emit


def _record_for(text: str):
    try:
        return record_for_fraction(parse_fraction(text))
    except DegenerateFractionError as exc:
        raise SystemExit(str(exc))


def _parse_poly(text: str) -> Polynomial:
    if text.startswith("cheb:"):
        return chebyshev(int(text[5:]))
    if text.startswith("coeffs:"):
        text = text[7:]
    return Polynomial([Fraction(tok) for tok in text.split(",") if tok])


def cmd_enumerate(args: argparse.Namespace) -> int:
    rec = _record_for(args.fraction)
    diagrams = enumerate_simple_diagrams(rec, budget=args.budget, strict=args.strict)
    payload = [diagram_summary(d) for d in diagrams]
    for d in diagrams:
        print(d.text())
    if args.json:
        print(json.dumps(payload, indent=2))
    return 0


def cmd_mc(args: argparse.Namespace) -> int:
    rec = _record_for(args.fraction)
    m = m_C(rec, cap=args.cap)
    print(m)
    return 0


def cmd_reduce(args: argparse.Namespace) -> int:
    word = PlaneWord.parse(args.word)
    trace = reduction_search(word, depth=args.depth)
    lower, prov = b_lower_bound(word, depth=args.depth)
    if args.json:
        print(
            json.dumps(
                {
                    "word": list(word.runs),
                    "base": list(trace.base.runs),
                    "cost": trace.cost,
                    "steps": [list(s) for s in trace.steps],
                    "b_lower": lower,
                    "provenance": prov,
                },
                indent=2,
            )
        )
    else:
        print(f"base {trace.base} cost {trace.cost}")
        print(f"b >= {lower}  ({prov})")
    return 0


def cmd_curve(args: argparse.Namespace) -> int:
    try:
        curve = PlaneCurve(_parse_poly(args.x), _parse_poly(args.y))
        cs = curve_crossings(curve)
    except (NotTrigonalError, NonNodalError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    word = word_from_curve(curve, cs)
    out = {
        "bidegree": list(curve.bidegree),
        "crossings": len(cs),
        "word": list(word.runs),
    }
    if args.z:
        try:
            d, rec = verify_embedding(curve.x, curve.y, _parse_poly(args.z))
        except EmbeddingError as exc:
            print(f"EmbeddingError: {exc}", file=sys.stderr)
            return 2
        out["diagram"] = d.text()
        out["knot"] = rec.name if rec else None
    if args.svg:
        from .curvelab.svg import render_svg

        with open(args.svg, "w") as fh:
            fh.write(render_svg(curve, cs))
        out["svg"] = args.svg
    if args.json:
        print(json.dumps(out, indent=2))
    else:
        print(f"bidegree (3,{curve.bidegree[1]}), {out['crossings']} crossings, word {word}")
        if "knot" in out:
            print(f"diagram {out['diagram']} -> {out['knot']}")
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    names = args.knots.split(",") if args.knots else None
    rows = build_table(names)
    print(emit(rows, args.format), end="")
    if any(r.error for r in rows):
        for r in rows:
            if r.error:
                print(f"{r.name}: FAILED: {r.error}", file=sys.stderr)
        return 2
    if args.diff:
        diff = diff_expected(rows, args.diff)
        if not diff.ok:
            for m in diff.mismatches:
                print(f"mismatch: {m}", file=sys.stderr)
            return 1
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="lexiknot",
        description="Lexicographic degree bounds for two-bridge knots",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="simple diagrams of a knot within a crossing budget")
    p.add_argument("--fraction", required=True, help="Schubert fraction A/B")
    p.add_argument("--budget", type=int, default=None, help="crossing budget (default: m_C)")
    p.add_argument("--strict", action="store_true", help="use the bare slide-normal filter")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("mc", help="minimal length of a +-1 diagram")
    p.add_argument("--fraction", required=True)
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("reduce", help="reduce a plane word and bound its degree")
    p.add_argument("--word", required=True, help="comma-separated run lengths, e.g. 2,1,3")
    p.add_argument("--depth", type=int, default=None, help="cap on reduction steps")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("curve", help="crossings and word of a plane curve")
    p.add_argument("--x", required=True, help="cheb:N or coeffs:c0,c1,... (rationals)")
    p.add_argument("--y", required=True)
    p.add_argument("--z", default=None, help="height polynomial; identifies the knot")
    p.add_argument("--svg", default=None, help="write an SVG rendering here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("table", help="reproduce the full results table")
    p.add_argument("--knots", default=None, help="comma-separated names, e.g. 3_1,6_2")
    p.add_argument("--format", choices=["csv", "json", "md"], default="md")
    p.add_argument("--diff", default=None, help="compare against a knots.csv file")
    p.set_defaults(func=cmd_table)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
