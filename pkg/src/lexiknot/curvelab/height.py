"""Height polynomials and verification of full space embeddings.

Given the plane curve and a choice of overpass at every crossing, a
height polynomial with one prescribed sign per crossing parameter is
built from linear factors at rational midpoints between consecutive
parameter intervals; its degree is the number of sign changes in the
Gauss sequence.  All sign checks are exact: by construction the roots
lie strictly between the parameter intervals, so evaluating at a
rational endpoint decides each sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from ..arith import KnotRecord, default_catalog
from ..diagram import TrigonalDiagram
from .curves import TOP, CrossingSet, PlaneCurve, _Eliminator, _fold_sides, curve_crossings
from .poly import Polynomial, sign_at_root


class HeightError(ValueError):
    """A prescribed-sign height could not be built or verified."""


class EmbeddingError(ValueError):
    """The z-coordinate fails to separate some crossing."""


def alternating_overpasses(cs: CrossingSet) -> list[bool]:
    """Overpass choices whose Gauss sequence alternates along the curve.

    Returns, per crossing, whether the earlier parameter is the
    overpass.  Fails if the parameter interleaving is incompatible with
    a strictly alternating sequence.
    """
    out: list[Optional[bool]] = [None] * len(cs.crossings)
    for i, (a, b) in enumerate(cs.param_order):
        ga, gb = a % 2 == 0, b % 2 == 0
        if ga == gb:
            raise HeightError("parameter interleaving admits no alternating Gauss sequence")
        out[i] = ga if a < b else gb
    return [bool(v) for v in out]


def gauss_sequence(cs: CrossingSet, over_at: Sequence[bool]) -> list[int]:
    """Signs +-1 at the 2m crossing parameters in parameter order."""
    signs = [0] * (2 * len(cs.crossings))
    for i, (a, b) in enumerate(cs.param_order):
        first, second = (a, b) if a < b else (b, a)
        s = 1 if over_at[i] else -1
        signs[first] = s
        signs[second] = -s
    return signs


def height_polynomial(cs: CrossingSet, over_at: Sequence[bool]) -> tuple[Polynomial, int]:
    """Polynomial with the prescribed sign at every crossing parameter.

    Built as +-prod(t - r_j) with one root at the midpoint of each
    consecutive parameter pair where the sign changes; the degree equals
    the sign-change count.  Verified a posteriori, exactly.
    """
    if len(over_at) != len(cs.crossings):
        raise HeightError("one overpass choice per crossing required")
    signs = gauss_sequence(cs, over_at)
    bounds = cs.param_bounds
    roots: list[Fraction] = []
    for k in range(len(signs) - 1):
        if signs[k] != signs[k + 1]:
            roots.append((bounds[k][1] + bounds[k + 1][0]) / 2)
    c = Polynomial.from_roots(roots)
    if _sign_on_interval(c, bounds[0]) != signs[0]:
        c = -c
    for k, g in enumerate(signs):
        if _sign_on_interval(c, bounds[k]) != g:
            raise HeightError(f"sign verification failed at parameter {k}")
    return c, len(roots)


def _sign_on_interval(p: Polynomial, iv: tuple[Fraction, Fraction]) -> int:
    lo, hi = p(iv[0]), p(iv[1])
    s_lo = (lo > 0) - (lo < 0)
    s_hi = (hi > 0) - (hi < 0)
    if s_lo != s_hi or s_lo == 0:
        raise HeightError("height polynomial has a root inside a parameter interval")
    return s_lo


@dataclass(frozen=True)
class Embedding:
    x: Polynomial
    y: Polynomial
    z: Polynomial

    @property
    def degrees(self) -> tuple[int, int, int]:
        return (self.x.degree, self.y.degree, self.z.degree)


def crossing_signs(curve: PlaneCurve, z: Polynomial, cs: Optional[CrossingSet] = None) -> list[int]:
    """+1 where the earlier-parameter strand passes over, else -1, exactly.

    z(t) - z(s) = (t - s) Zh(u) on a crossing pair, and t < s, so the
    sign is read off -Zh at the isolated symmetric coordinate.
    """
    if cs is None:
        cs = curve_crossings(curve)
    el = _Eliminator(curve)
    from .curves import _pair_reduction

    Zh, _ = _pair_reduction(z, el.v_over, el.lead)
    out = []
    for c in cs.crossings:
        s = sign_at_root(Zh, c.u)
        if s == 0:
            raise EmbeddingError(
                f"z does not separate the crossing near u in "
                f"({float(c.u.lo):.4f}, {float(c.u.hi):.4f})"
            )
        out.append(-s)
    return out


def crossing_handedness(curve: PlaneCurve, z: Polynomial, cs: Optional[CrossingSet] = None) -> list[int]:
    """Geometric twist sense of each crossing, in x-order, exactly.

    The handedness is the sign of det(T_over, T_under) of the plane
    tangents, i.e. over/under combined with which branch is steeper:
    sign(z(t)-z(s)) * sign(slope(t)-slope(s)).
    """
    if cs is None:
        cs = curve_crossings(curve)
    el = _Eliminator(curve)
    from .curves import _pair_reduction

    A_z, _ = _pair_reduction(z, el.v_over, el.lead)
    slope_num = el.antisymmetric_part(curve.y.derivative(), curve.x.derivative())
    out = []
    for c in cs.crossings:
        s_az = sign_at_root(A_z, c.u)
        s_num = sign_at_root(slope_num, c.u)
        if s_az == 0:
            raise EmbeddingError("z does not separate a crossing")
        if s_num == 0:
            raise EmbeddingError("tangent branches are parallel at a crossing")
        # det(T_over, T_under) reduces to -sign(A_z) * sign of the
        # antisymmetric slope part; the x'(t)x'(s) factor cancels
        out.append(-s_az * s_num)
    return out


def _signed_entries(cs: CrossingSet, curve: PlaneCurve, hands: Sequence[int]) -> list[int]:
    """Signed run entries of the diagram in x-order.

    Crossings grouped by position into twist regions; the twist sense
    must be uniform inside a region.  Odd regions count right twists
    positively, even regions negatively.
    """
    letters = [c.letter for c in cs.crossings]
    left, _right = _fold_sides(curve)
    lead_marker = bool(letters) and left == letters[0]
    if letters and (letters[0] == TOP) != lead_marker:
        letters = [1 - p for p in letters]

    entries: list[int] = []
    hsigns: list[int] = []
    if letters and letters[0] == 1:
        entries.append(0)
        hsigns.append(0)
    prev = None
    for letter, h in zip(letters, hands):
        if letter == prev:
            if h != hsigns[-1]:
                raise EmbeddingError("mixed twist sense inside one region")
            entries[-1] += 1 if entries[-1] > 0 else -1
        else:
            parity = len(entries) % 2
            entries.append(h if parity == 0 else -h)
            hsigns.append(h)
            prev = letter
    return entries


def _determinant(cs: CrossingSet, overs: Sequence[int], hands: Sequence[int]) -> int:
    """Knot determinant from the Kauffman bracket at the determinant point.

    The state sum runs over the parameter-ordered Gauss structure of
    the curve itself (closure through infinity adds no crossing on the
    sphere), so no normal-position assumption enters.  At the
    determinant point a loop counts zero, so only one-loop states
    contribute and |bracket| is the determinant, an integer.
    """
    n = len(cs.crossings)
    if n == 0:
        return 1
    # visits: parameter positions of each crossing; earlier visit is the
    # overpass iff overs[i] > 0
    incidences = []  # per crossing: (over_in, over_out, under_in, under_out) arc ids
    for i, (a, b) in enumerate(cs.param_order):
        first, second = (a, b) if a < b else (b, a)
        over_visit, under_visit = (first, second) if overs[i] > 0 else (second, first)
        arcs = 2 * n
        incidences.append(
            (
                (over_visit - 1) % arcs,
                over_visit,
                (under_visit - 1) % arcs,
                under_visit,
            )
        )

    import cmath

    A0 = cmath.exp(-1j * cmath.pi / 4)
    total = 0j
    arcs = 2 * n
    for state in range(1 << n):
        parent = list(range(arcs))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int) -> None:
            parent[find(x)] = find(y)

        exp = 0
        for i in range(n):
            o_in, o_out, u_in, u_out = incidences[i]
            pick_a = (state >> i) & 1 == 0
            exp += 1 if pick_a else -1
            same_side = (hands[i] > 0) == pick_a
            if same_side:
                union(o_out, u_out)
                union(o_in, u_in)
            else:
                union(o_out, u_in)
                union(o_in, u_out)
        loops = len({find(a) for a in range(arcs)})
        if loops == 1:
            total += A0 ** exp
    det = abs(total)
    rounded = round(det)
    if abs(det - rounded) > 1e-6:
        raise EmbeddingError(f"determinant did not converge to an integer: {det}")
    return rounded


def verify_embedding(
    x: Polynomial, y: Polynomial, z: Polynomial
) -> tuple[TrigonalDiagram, Optional[KnotRecord]]:
    """Extract the signed trigonal diagram of (x, y, z) and identify the knot.

    The xy-projection must be nodal and z must separate every crossing,
    which is checked exactly.  Identification goes through the knot
    determinant (the two-bridge fraction numerator) computed from the
    Gauss structure of the curve, with the crossing count bounding the
    crossing number; this avoids any assumption about how the closure
    arc through infinity sits relative to the folds.
    """
    curve = PlaneCurve(x, y)
    cs = curve_crossings(curve)
    overs = crossing_signs(curve, z, cs)
    hands = crossing_handedness(curve, z, cs)
    d = TrigonalDiagram(_signed_entries(cs, curve, hands))
    det = _determinant(cs, overs, hands)
    matches = [
        rec
        for rec in default_catalog()
        if rec.fraction.alpha == det and rec.crossing_number <= len(cs.crossings)
    ]
    if len(matches) == 1:
        return d, matches[0]
    if not matches:
        return d, None
    raise EmbeddingError(
        f"determinant {det} with {len(cs.crossings)} crossings matches several knots: "
        + ", ".join(r.name for r in matches)
    )
