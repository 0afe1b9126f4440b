"""Acceptance suite: reproduces the published 26-row results table.

Run with `pytest tests/test_acceptance.py -v -s` to see one line per
criterion.
"""

import random
import time
from fractions import Fraction
from importlib import resources

import pytest

from lexiknot.arith import cf_eval, cf_expand_positive, default_catalog, fraction_equivalent
from lexiknot.curvelab import (
    PlaneCurve,
    Polynomial,
    add_triple_point,
    alternating_overpasses,
    chebyshev,
    curve_crossings,
    height_polynomial,
    perturb,
    verify_embedding,
    word_from_curve,
)
from lexiknot.diagram import TrigonalDiagram, gauss_sign_changes
from lexiknot.enumeration import canonical_diagram, chebyshev_degree, enumerate_simple_diagrams, table_budget
from lexiknot.planereduce import (
    PlaneWord,
    b_lower_bound,
    canonical_runs,
    reduction_search,
    same_word_class,
)
from lexiknot.report import build_table, diff_expected

CAT = default_catalog()

# the published Simple Diagrams column, one list per knot
TABLE_DIAGRAMS = {
    "3_1": ["3"],
    "4_1": ["2,2"],
    "5_1": ["5"],
    "5_2": ["2,3"],
    "6_1": ["2,4"],
    "6_2": ["2,1,3", "3,-4"],
    "6_3": ["2,1,1,2"],
    "7_1": ["7"],
    "7_2": ["2,5"],
    "7_3": ["3,4"],
    "7_4": ["3,1,3", "4,-4"],
    "7_5": ["2,2,3", "3,-2,4"],
    "7_6": ["2,1,2,2", "2,3,-3", "2,2,-2,3"],
    "7_7": ["2,1,1,1,2"],
    "8_1": ["2,6"],
    "8_2": ["2,1,5", "3,-6"],
    "8_3": ["4,4"],
    "8_4": ["3,1,4", "4,-5"],
    "8_6": ["2,3,3"],
    "8_7": ["2,1,1,4", "3,-2,-4", "2,2,-5"],
    "8_8": ["2,1,3,2", "2,4,-3"],
    "8_9": ["3,1,1,3", "3,2,-4"],
    "8_11": ["2,1,2,3", "3,3,-3", "3,-3,-3", "2,2,-2,4"],
    "8_12": ["2,2,2,2", "2,3,-2,3"],
    "8_13": ["2,1,1,1,3", "3,1,2,-3", "2,2,-2,-3", "2,1,2,-4", "3,-3,4"],
    "8_14": ["2,1,1,2,2", "2,2,2,-3", "2,2,-3,-2", "2,1,2,-2,3"],
}

# Degree-column rows whose base lies in the required base list:
# (source word, base, cost)
TABLE_REDUCTIONS = [
    ((3,), (3,), 0),
    ((2, 2), (2, 2), 0),
    ((5,), (5,), 0),
    ((2, 3), (2, 3), 0),
    ((2, 4), (2, 4), 0),
    ((2, 1, 3), (3,), 3),
    ((3, 4), (3, 4), 0),
    ((2, 1, 1, 2), (3,), 3),
    ((7,), (7,), 0),
    ((2, 5), (2, 5), 0),
    ((3, 1, 3), (1,), 6),
    ((4, 4), (4, 4), 0),
    ((2, 2, 3), (0, 1, 3), 3),
    ((2, 1, 2, 2), (1,), 6),
    ((2, 1, 1, 1, 2), (1,), 6),
    ((2, 6), (2, 6), 0),
    ((2, 1, 5), (5,), 3),
    ((3, 6), (3, 6), 0),
    ((3, 1, 4), (0, 2), 6),
    ((4, 5), (4, 5), 0),
    ((2, 1, 1, 4), (5,), 3),
    ((2, 1, 3, 2), (2, 0), 6),
    ((3, 1, 1, 3), (5,), 3),
    ((2, 1, 2, 3), (0, 2), 6),
    ((2, 2, 2, 2), (0, 1, 1, 0), 6),
    ((2, 1, 1, 1, 3), (0, 2), 6),
    ((3, 1, 2, 3), (3,), 6),
    ((2, 1, 1, 2, 2), (2, 0), 6),
    ((2, 1, 2, 2, 3), (0, 1, 3), 6),
]

STARRED = {"6_2", "7_4", "7_6", "8_2", "8_4", "8_9", "8_11", "8_14"}


def _report(criterion: str, ok: bool) -> None:
    print(f"{'PASS' if ok else 'FAIL'} {criterion}")
    assert ok


def test_criterion_1_chebyshev_degrees():
    t0 = time.monotonic()
    ok = True
    for rec in CAT:
        t = chebyshev_degree(rec)
        ok = ok and (t.a, t.b, t.c) == (3, rec.degC_b, rec.degC_c)
    elapsed = time.monotonic() - t0
    _report(f"criterion 1: deg_C column for all 26 knots in {elapsed:.1f}s (< 10s)", ok and elapsed < 10)


def test_criterion_2_simple_diagram_enumeration():
    t0 = time.monotonic()
    ok = True
    for rec in CAT:
        got = {d.entries for d in enumerate_simple_diagrams(rec, budget=table_budget(rec))}
        expected = {
            canonical_diagram(TrigonalDiagram.parse(t)).entries for t in TABLE_DIAGRAMS[rec.name]
        }
        ok = ok and got == expected
    ok = ok and len(enumerate_simple_diagrams(CAT.get("8_13"), budget=10)) == 5
    ok = ok and len(enumerate_simple_diagrams(CAT.get("6_2"), budget=7)) == 2
    elapsed = time.monotonic() - t0
    _report(f"criterion 2: simple diagrams of all 26 knots in {elapsed:.1f}s (< 60s)", ok and elapsed < 60)


def test_criterion_3_reduction_accounting():
    ok = True
    for src, base, cost in TABLE_REDUCTIONS:
        trace = reduction_search(PlaneWord(src))
        ok = ok and canonical_runs(trace.base.runs) == canonical_runs(base) and trace.cost == cost
    # rows that need the table-derived override are flagged with its provenance
    for src in ((2, 3, 3),):
        trace = reduction_search(PlaneWord(src))
        lo, prov = b_lower_bound(PlaneWord(src))
        ok = ok and canonical_runs(trace.base.runs) == canonical_runs((0, 2, 3))
        ok = ok and trace.cost == 3 and lo == 11 and "8_6" in prov
    _report("criterion 3: reduction accounting reproduces the Degree column", ok)


def test_criterion_4_final_verdicts():
    rows = build_table()
    ok = all(r.error is None for r in rows)
    for r in rows:
        rec = r.record
        ok = ok and (r.b, r.c_lo, r.c_hi) == (rec.lex_b, rec.lex_c_lo, rec.lex_c_hi)
        ok = ok and r.starred == (r.name in STARRED)
        ok = ok and (r.status == "exact") == (rec.lex_c_lo == rec.lex_c_hi)
    shipped = resources.files("lexiknot.data").joinpath("knots.csv")
    with resources.as_file(shipped) as path:
        ok = ok and diff_expected(rows, str(path)).ok
    _report("criterion 4: verdicts match the lexicographic-degree column, zero diffs", ok)


def test_criterion_5_curve_oracles():
    checks = []

    def timed(fn):
        t0 = time.monotonic()
        out = fn()
        return out, time.monotonic() - t0

    def oracle_t3t4():
        c = PlaneCurve(chebyshev(3), chebyshev(4))
        cs = curve_crossings(c)
        return len(cs) == 3 and same_word_class(word_from_curve(c, cs), PlaneWord((3,)))

    def oracle_t3t5():
        c = PlaneCurve(chebyshev(3), chebyshev(5))
        cs = curve_crossings(c)
        return len(cs) == 4 and same_word_class(word_from_curve(c, cs), PlaneWord((2, 2)))

    def oracle_quintic():
        c = PlaneCurve(Polynomial([0, -3, 0, 1]), Polynomial([0, 4, 0, -4, 0, 1]))
        cs = curve_crossings(c)
        return len(cs) == 2 and word_from_curve(c, cs).runs == (0, 1, 1, 0)

    def oracle_quartic():
        c = PlaneCurve(Polynomial([0, -3, 0, 1]), Polynomial([-2, -2, -2, 0, 1]))
        cs = curve_crossings(c)
        return same_word_class(word_from_curve(c, cs), PlaneWord((0, 2)))

    q7 = add_triple_point(PlaneCurve(chebyshev(3), chebyshev(4)), Fraction(-3, 4), Fraction(1))

    def oracle_q7_plus():
        w = word_from_curve(perturb(q7, Fraction(1, 10**5)))
        return same_word_class(w, PlaneWord((2, 1, 3)))

    def oracle_q7_minus():
        w = word_from_curve(perturb(q7, Fraction(-1, 10**5)))
        return same_word_class(w, PlaneWord((2, 1, 1, 2)))

    ok = True
    for name, fn in (
        ("(T3,T4)", oracle_t3t4),
        ("(T3,T5)", oracle_t3t5),
        ("quintic", oracle_quintic),
        ("quartic", oracle_quartic),
        ("Q7 eps>0", oracle_q7_plus),
        ("Q7 eps<0", oracle_q7_minus),
    ):
        good, dt = timed(fn)
        checks.append(f"{name} {dt:.1f}s")
        ok = ok and good and dt < 5
    _report("criterion 5: curve oracles (" + ", ".join(checks) + ", each < 5s)", ok)


def test_criterion_6_end_to_end_witnesses():
    ok = True
    c34 = PlaneCurve(chebyshev(3), chebyshev(4))
    cs = curve_crossings(c34)
    c5, _ = height_polynomial(cs, alternating_overpasses(cs))
    d, rec = verify_embedding(c34.x, c34.y, c5)
    ok = ok and rec is not None and rec.name == "3_1" and (3, 4, 5) == (3, c34.y.degree, c5.degree)

    c35 = PlaneCurve(chebyshev(3), chebyshev(5))
    cs = curve_crossings(c35)
    c7, _ = height_polynomial(cs, alternating_overpasses(cs))
    d, rec = verify_embedding(c35.x, c35.y, c7)
    ok = ok and rec is not None and rec.name == "4_1" and c7.degree == 7

    # full rational (3,7,11) witness: triple point on the mid-gap line,
    # resolved toward the D(2,1,3) side
    base = add_triple_point(c34, Fraction(-1, 2), Fraction(1))
    curve = perturb(base, Fraction(1, 1024))
    cs = curve_crossings(curve)
    c11, _ = height_polynomial(cs, alternating_overpasses(cs))
    d, rec = verify_embedding(curve.x, curve.y, c11)
    ok = (
        ok
        and rec is not None
        and rec.name == "6_2"
        and (curve.x.degree, curve.y.degree, c11.degree) == (3, 7, 11)
    )
    _report("criterion 6: embeddings (3,4,5)->3_1, (3,5,7)->4_1, (3,7,11)->6_2", ok)


def test_criterion_7_property_suites():
    from math import gcd

    ok = True
    # continued fraction round trip, every reduced fraction with alpha <= 99
    for alpha in range(2, 100):
        for beta in range(1, alpha):
            if gcd(alpha, beta) == 1:
                from lexiknot.arith import SchubertFraction

                f = SchubertFraction.make(alpha, beta)
                ok = ok and cf_eval(cf_expand_positive(f)) == f

    # reversal equivalence on ~10^4 random diagrams
    rng = random.Random(42)
    checked = 0
    while checked < 10_000:
        seq = [rng.choice([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5]) for _ in range(rng.randint(1, 6))]
        f = cf_eval(seq)
        if f.alpha < 2:
            continue
        ok = ok and fraction_equivalent(f, cf_eval(seq[::-1]), include_mirror=True)
        checked += 1

    # Chebyshev curves have the maximal node count b - 1
    for b in (4, 5, 7, 8, 10, 11):
        ok = ok and len(curve_crossings(PlaneCurve(chebyshev(3), chebyshev(b)))) == b - 1

    # crossing-count conservation under every cost-free move, 10^4 samples
    from lexiknot.planereduce import neighbors, normalize_runs

    seen = 0
    while seen < 10_000:
        runs = tuple(rng.randint(0, 4) for _ in range(rng.randint(1, 6)))
        total = sum(normalize_runs(runs))
        for nb in neighbors(PlaneWord(runs)):
            ok = ok and sum(normalize_runs(nb.runs)) == total
            seen += 1

    # Gauss sign-change counts against the five explicit curves (s = 0)
    curves = [
        (PlaneCurve(chebyshev(3), chebyshev(2)), TrigonalDiagram([1])),
        (PlaneCurve(chebyshev(3), chebyshev(4)), TrigonalDiagram([3])),
        (PlaneCurve(chebyshev(3), chebyshev(5)), TrigonalDiagram([2, 2])),
    ]
    base = add_triple_point(PlaneCurve(chebyshev(3), chebyshev(4)), Fraction(-1, 2), Fraction(1))
    curves.append((perturb(base, Fraction(1, 1024)), TrigonalDiagram([2, 1, 3])))
    curves.append((perturb(base, Fraction(-1, 1024)), TrigonalDiagram([2, 1, 1, 2])))
    for curve, diagram in curves:
        cs = curve_crossings(curve)
        _, changes = height_polynomial(cs, alternating_overpasses(cs))
        ok = ok and changes == gauss_sign_changes(diagram)

    _report("criterion 7: property suites (CF round trip, reversal, nodal counts, conservation, Gauss)", ok)
