import itertools

import pytest

from lexiknot.arith import cf_eval, default_catalog, fraction_equivalent
from lexiknot.diagram import TrigonalDiagram, crossing_number, islets
from lexiknot.enumeration import (
    DegreeTriple,
    SearchExhausted,
    canonical_diagram,
    chebyshev_degree,
    enumerate_simple_diagrams,
    m_C,
    table_budget,
)

CAT = default_catalog()


class TestMC:
    def test_examples(self):
        assert m_C(CAT.get("3_1")) == 3
        assert m_C(CAT.get("4_1")) == 4
        assert m_C(CAT.get("7_7")) == 7

    def test_not_found_within_cap(self):
        with pytest.raises(SearchExhausted):
            m_C(CAT.get("8_12"), cap=6)

    def test_fibonacci_growth_bound(self):
        # no +-1 word of length m can reach alpha beyond the Fibonacci range
        fib = [1, 1]
        while len(fib) < 20:
            fib.append(fib[-1] + fib[-2])
        for rec in CAT:
            m = m_C(rec)
            lower = next(i for i, f in enumerate(fib, start=-1) if f >= rec.fraction.alpha)
            assert m >= lower

    def test_witness_exists_at_m(self):
        for name in ("5_2", "6_3", "7_7"):
            rec = CAT.get(name)
            m = m_C(rec)
            found = any(
                fraction_equivalent(cf_eval(s), rec.fraction, include_mirror=True)
                for s in itertools.product((1, -1), repeat=m)
            )
            assert found


class TestChebyshevDegree:
    def test_examples(self):
        assert tuple(chebyshev_degree(CAT.get("6_2"))) == (3, 8, 10)
        assert tuple(chebyshev_degree(CAT.get("8_12"))) == (3, 11, 13)
        assert tuple(chebyshev_degree(CAT.get("5_1"))) == (3, 7, 8)

    def test_b_coprime_to_three(self):
        for rec in CAT:
            t = chebyshev_degree(rec)
            assert t.b % 3 != 0

    def test_degree_triple_validation(self):
        with pytest.raises(ValueError):
            DegreeTriple(3, 6, 9)
        with pytest.raises(ValueError):
            DegreeTriple(3, 11, 7)


def brute_force_diagrams(rec, budget):
    """Independent generator: all islet-free nonzero words up to the budget
    matching the knot, with no simplicity pruning beyond the islet rule."""
    out = set()
    for length in range(1, budget + 1):
        for absvals in itertools.product(range(1, budget + 1), repeat=length):
            if sum(absvals) > budget:
                continue
            for signs in itertools.product((1, -1), repeat=length):
                entries = tuple(a * s for a, s in zip(absvals, signs))
                d = TrigonalDiagram(entries)
                if islets(d):
                    continue
                if not fraction_equivalent(cf_eval(entries), rec.fraction, include_mirror=True):
                    continue
                out.add(canonical_diagram(d).entries)
    return out


class TestEnumeration:
    def test_6_2(self):
        diags = enumerate_simple_diagrams(CAT.get("6_2"), budget=7)
        assert {d.entries for d in diags} == {
            canonical_diagram(TrigonalDiagram([2, 1, 3])).entries,
            canonical_diagram(TrigonalDiagram([3, -4])).entries,
        }

    def test_7_7(self):
        diags = enumerate_simple_diagrams(CAT.get("7_7"), budget=7)
        assert len(diags) == 1
        assert diags[0].entries == canonical_diagram(TrigonalDiagram([2, 1, 1, 1, 2])).entries

    def test_8_13_budget_10(self):
        diags = enumerate_simple_diagrams(CAT.get("8_13"), budget=10)
        assert len(diags) == 5

    def test_table_budget_exception(self):
        assert table_budget(CAT.get("8_13")) == 10
        assert table_budget(CAT.get("6_2")) == m_C(CAT.get("6_2"))

    def test_crossing_number_invariant(self):
        for name in ("5_2", "6_2", "7_5"):
            rec = CAT.get(name)
            for d in enumerate_simple_diagrams(rec):
                assert crossing_number(d) == rec.crossing_number

    def test_normal_form_always_present(self):
        from lexiknot.arith import cf_expand_positive

        for rec in CAT:
            nf = canonical_diagram(TrigonalDiagram(cf_expand_positive(rec.fraction)))
            found = {d.entries for d in enumerate_simple_diagrams(rec, budget=table_budget(rec))}
            assert nf.entries in found

    def test_exhaustive_against_brute_force(self):
        # soundness: everything returned appears in the unpruned islet-free
        # generator; completeness: every generated word that passes the
        # simplicity filter is returned
        from lexiknot.enumeration import _passes_simple_filter

        for name, budget in (("4_1", 4), ("5_2", 6), ("6_2", 7)):
            rec = CAT.get(name)
            ours = {d.entries for d in enumerate_simple_diagrams(rec, budget=budget)}
            brute = brute_force_diagrams(rec, budget)
            assert ours <= brute
            kept = {
                e
                for e in brute
                if any(
                    _passes_simple_filter(img)
                    for img in (e, e[::-1], tuple(-m for m in e), tuple(-m for m in e[::-1]))
                )
            }
            assert ours == kept

    def test_budget_below_crossing_number_rejected(self):
        with pytest.raises(ValueError):
            enumerate_simple_diagrams(CAT.get("6_2"), budget=5)

    def test_strict_mode_is_superset_on_6_2(self):
        loose = enumerate_simple_diagrams(CAT.get("6_2"), budget=7, strict=True)
        default = enumerate_simple_diagrams(CAT.get("6_2"), budget=7)
        assert {d.entries for d in default} <= {d.entries for d in loose}


class TestCanonical:
    def test_four_images_collapse(self):
        images = [
            TrigonalDiagram([3, 1, 2, -3]),
            TrigonalDiagram([-3, 2, 1, 3]),
            TrigonalDiagram([-3, -1, -2, 3]),
            TrigonalDiagram([3, -2, -1, -3]),
        ]
        canon = {canonical_diagram(d).entries for d in images}
        assert len(canon) == 1

    def test_positive_first_preferred(self):
        c = canonical_diagram(TrigonalDiagram([-2, -2]))
        assert c.entries[0] > 0


class TestOffCatalog:
    def test_torus_knot_nine_one(self):
        from lexiknot.arith import SchubertFraction, record_for_fraction

        rec = record_for_fraction(SchubertFraction.make(9, 1))
        assert rec.crossing_number == 9
        assert m_C(rec) == 12

    def test_links_rejected(self):
        from lexiknot.arith import DegenerateFractionError, SchubertFraction, record_for_fraction

        with pytest.raises(DegenerateFractionError):
            record_for_fraction(SchubertFraction.make(4, 1))

    def test_budget_cap(self):
        rec = CAT.get("3_1")
        with pytest.raises(ValueError):
            enumerate_simple_diagrams(rec, budget=17)
