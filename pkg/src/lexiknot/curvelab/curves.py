"""Crossings and words of plane trigonal polynomial curves, exactly.

For a curve (x, y) = (P(t), Q(t)) with deg P = 3, double points solve
P(t) = P(s), Q(t) = Q(s), t != s.  In the symmetric coordinates
u = t + s, v = ts the cubic equation is linear in v,

    v(u) = (p3 u^2 + p2 u + p1) / p3,

and reducing Q(t) - Q(s) by t - s gives a single polynomial W(u) whose
real roots with u^2 - 4 v(u) > 0 are the crossings.  Values on a branch
pair reduce modulo z^2 - u z + v(u):  z^k = a_k(u) z + b_k(u), so the
crossing height, the crossing x, and the third-strand height are all
polynomials in u, and every discrete decision is a certified sign of a
polynomial at an isolated algebraic number.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from ..planereduce import PlaneWord, letters_to_runs
from .poly import (
    Polynomial,
    RootInterval,
    isolate_real_roots,
    sign_at_root,
    sqrt_bounds,
)


class NonNodalError(ValueError):
    """The curve has a tangency, a multiple point beyond a node, or
    crossings that could not be separated."""


class NotTrigonalError(ValueError):
    """The x-coordinate is not a cubic with two distinct real folds."""


BOTTOM, TOP = 0, 1  # crossing positions: third strand above vs below


@dataclass(frozen=True)
class PlaneCurve:
    x: Polynomial
    y: Polynomial

    def __post_init__(self):
        if self.x.degree != 3:
            raise NotTrigonalError(f"x-degree {self.x.degree}, need a cubic")
        if self.y.degree < 2:
            raise NotTrigonalError(f"y-degree {self.y.degree}, need at least 2")
        crit = self.x.derivative()
        if len(isolate_real_roots(crit)) != 2:
            raise NotTrigonalError("the cubic needs two distinct real critical points")

    @property
    def bidegree(self) -> tuple[int, int]:
        return (3, self.y.degree)


@dataclass(frozen=True)
class Crossing:
    u: RootInterval            # isolated root of the symmetric polynomial
    t: tuple[Fraction, Fraction]  # rational bounds, t < s
    s: tuple[Fraction, Fraction]
    x: tuple[Fraction, Fraction]
    letter: int                # BOTTOM or TOP

    @property
    def x_mid(self) -> Fraction:
        return (self.x[0] + self.x[1]) / 2


@dataclass(frozen=True)
class CrossingSet:
    curve: PlaneCurve
    crossings: tuple[Crossing, ...]   # sorted by x
    # per crossing, positions of its two parameters in the global t-order
    param_order: tuple[tuple[int, int], ...]
    param_bounds: tuple[tuple[Fraction, Fraction], ...]

    def __len__(self) -> int:
        return len(self.crossings)


def _pair_reduction(q: Polynomial, v_over: Polynomial, lead: Fraction):
    """a_k, b_k with z^k = a_k z + b_k modulo z^2 - u z + v(u).

    v(u) is handed in as v_over / lead.  Returns (A, B) for q itself:
    q(z) = A(u) z + B(u), coefficients exact rationals.
    """
    u = Polynomial([0, 1])
    a_prev, b_prev = Polynomial.zero(), Polynomial.const(1)   # z^0
    a_cur, b_cur = Polynomial.const(1), Polynomial.zero()     # z^1
    v = v_over.scale(Fraction(1, 1) / lead)
    A, B = Polynomial.zero(), Polynomial.zero()
    for k, c in enumerate(q.coeffs):
        if k == 0:
            ak, bk = a_prev, b_prev
        elif k == 1:
            ak, bk = a_cur, b_cur
        else:
            a_cur, b_cur, a_prev, b_prev = (
                u * a_cur + b_cur,
                (-v) * a_cur,
                a_cur,
                b_cur,
            )
            ak, bk = a_cur, b_cur
        if c:
            A = A + ak.scale(c)
            B = B + bk.scale(c)
    return A, B


class _Eliminator:
    """Shared symmetric-coordinate data for one curve."""

    def __init__(self, curve: PlaneCurve):
        self.curve = curve
        p = curve.x.coeffs
        self.lead = p[3]
        # v(u) = (p3 u^2 + p2 u + p1)/p3
        self.v_over = Polynomial([p[1], p[2], p[3]])
        self.sum_roots = -p[2] / p[3]
        A_q, B_q = _pair_reduction(curve.y, self.v_over, self.lead)
        A_x, B_x = _pair_reduction(curve.x, self.v_over, self.lead)
        assert A_x.is_zero()
        self.W = A_q                    # vanishes exactly at crossings
        self.x_of_u = B_x               # crossing x
        self.y_of_u = B_q               # crossing height
        # third branch: r = sum_roots - u, heights via composition
        self.r_of_u = Polynomial([self.sum_roots, -1])
        self.y_third = curve.y.compose(self.r_of_u)
        # discriminant of the pair: u^2 - 4 v(u)
        self.disc = Polynomial([0, 0, 1]) - self.v_over.scale(Fraction(4, 1) / self.lead)

    def v_at(self, u: Fraction) -> Fraction:
        return self.v_over(u) / self.lead

    def antisymmetric_part(self, f: Polynomial, g: Polynomial) -> Polynomial:
        """(f(t) g(s) - f(s) g(t)) / (s - t) as a polynomial in u."""
        v = self.v_over.scale(Fraction(1, 1) / self.lead)
        h = [Polynomial.const(1)]  # complete homogeneous h_m(u, v)
        u = Polynomial([0, 1])
        out = Polynomial.zero()
        vpow = [Polynomial.const(1)]
        deg = max(f.degree, g.degree)
        for m in range(1, deg + 1):
            h.append(u * h[-1] - v * h[-2] if m >= 2 else u)
        for _ in range(deg):
            vpow.append(vpow[-1] * v)
        for i in range(deg + 1):
            fi = f.coeffs[i] if i <= f.degree else 0
            for j in range(i):
                gj = g.coeffs[j] if j <= g.degree else 0
                coef = Fraction(gj) * Fraction(fi)
                coef2 = (Fraction(f.coeffs[j]) if j <= f.degree else Fraction(0)) * (
                    Fraction(g.coeffs[i]) if i <= g.degree else Fraction(0)
                )
                c = coef - coef2
                if c:
                    out = out + (vpow[j] * h[i - j - 1]).scale(c)
        return out

    def pair_symmetric_value(self, f: Polynomial) -> Polynomial:
        """f(t) f(s) as a polynomial in u (via the reduction)."""
        A, B = _pair_reduction(f, self.v_over, self.lead)
        # f(t) f(s) = (A t + B)(A s + B) = A^2 v + A B u + B^2
        v = self.v_over.scale(Fraction(1, 1) / self.lead)
        return A * A * v + A * B * Polynomial([0, 1]) + B * B


def _interval_eval(p: Polynomial, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Crude interval extension of p over [lo, hi] by Horner with interval ops."""
    alo = ahi = Fraction(0)
    for c in reversed(p.coeffs):
        cands = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo, ahi = min(cands) + c, max(cands) + c
    return alo, ahi


def curve_crossings(curve: PlaneCurve, max_refine: int = 64) -> CrossingSet:
    """All double points, certified simple and sorted by x.

    Raises NonNodalError for tangencies (multiple roots of the
    symmetric polynomial), vanishing pair separation, a third branch
    meeting a crossing, or crossings whose x could not be separated
    (a triple point stalls exactly there).
    """
    el = _Eliminator(curve)
    W = el.W
    if W.is_zero():
        raise NonNodalError("symmetric system degenerates; y is a function of x")
    if W.gcd(W.derivative()).degree >= 1:
        raise NonNodalError("tangency: the symmetric polynomial has a multiple root")

    roots = isolate_real_roots(W)
    kept: list[RootInterval] = []
    for r in roots:
        ds = sign_at_root(el.disc, r)
        if ds == 0:
            raise NonNodalError(f"pair separation vanishes near u in ({float(r.lo):.4f}, {float(r.hi):.4f})")
        if ds > 0:
            kept.append(r)

    # letters: exact sign of third-branch height minus crossing height
    letters: list[int] = []
    for r in kept:
        sg = sign_at_root(el.y_third - el.y_of_u, r)
        if sg == 0:
            raise NonNodalError(
                f"non-nodal configuration: third branch passes through the "
                f"crossing near u in ({float(r.lo):.4f}, {float(r.hi):.4f})"
            )
        letters.append(BOTTOM if sg > 0 else TOP)

    # refine u-intervals until the crossing x-intervals are pairwise disjoint
    def x_ivs(rs: Sequence[RootInterval]) -> list[tuple[Fraction, Fraction]]:
        return [_interval_eval(el.x_of_u, r.lo, r.hi) for r in rs]

    for _ in range(max_refine):
        ivs = x_ivs(kept)
        clash = _first_overlap(ivs)
        if clash is None:
            break
        i, j = clash
        kept[i] = kept[i].refine()
        kept[j] = kept[j].refine()
    else:
        ivs = x_ivs(kept)
        i, j = _first_overlap(ivs)  # type: ignore[misc]
        raise NonNodalError(
            "non-nodal configuration: crossings share x near "
            f"({float(ivs[i][0]):.4f}, {float(ivs[i][1]):.4f}) — a triple point?"
        )

    order = sorted(range(len(kept)), key=lambda i: ivs[i][0])
    kept = [kept[i] for i in order]
    letters = [letters[i] for i in order]
    ivs = [ivs[i] for i in order]

    # per-crossing parameter bounds t < s from u and the pair discriminant
    def param_bounds(r: RootInterval) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        dlo, dhi = _interval_eval(el.disc, r.lo, r.hi)
        if dlo < 0:
            dlo = Fraction(0)
        slo = sqrt_bounds(dlo)[0]
        shi = sqrt_bounds(dhi)[1]
        t_iv = ((r.lo - shi) / 2, (r.hi - slo) / 2)
        s_iv = ((r.lo + slo) / 2, (r.hi + shi) / 2)
        return t_iv, s_iv

    for _ in range(max_refine):
        bounds: list[tuple[Fraction, Fraction]] = []
        for r in kept:
            t_iv, s_iv = param_bounds(r)
            bounds.extend((t_iv, s_iv))
        if _first_overlap(bounds) is None:
            break
        kept = [r.refine() for r in kept]
    else:
        raise NonNodalError("crossing parameters could not be separated")

    crossings = []
    pairs = []
    flat = sorted(range(len(bounds)), key=lambda i: bounds[i][0])
    pos = {idx: rank for rank, idx in enumerate(flat)}
    for i, r in enumerate(kept):
        t_iv, s_iv = bounds[2 * i], bounds[2 * i + 1]
        crossings.append(Crossing(u=r, t=t_iv, s=s_iv, x=ivs[i], letter=letters[i]))
        pairs.append((pos[2 * i], pos[2 * i + 1]))
    ordered_bounds = tuple(bounds[i] for i in flat)
    return CrossingSet(
        curve=curve,
        crossings=tuple(crossings),
        param_order=tuple(pairs),
        param_bounds=ordered_bounds,
    )


def _first_overlap(ivs: Sequence[tuple[Fraction, Fraction]]) -> Optional[tuple[int, int]]:
    order = sorted(range(len(ivs)), key=lambda i: ivs[i][0])
    for a, b in zip(order, order[1:]):
        if ivs[b][0] <= ivs[a][1]:
            return a, b
    return None


def _fold_sides(curve: PlaneCurve) -> tuple[int, int]:
    """Positions (BOTTOM/TOP) of the left and right fold pairs.

    At each critical value of the cubic two strands merge; the side is
    decided by comparing their height with the third strand's, exactly.
    """
    crit = isolate_real_roots(curve.x.derivative())
    sum_roots = -curve.x.coeffs[2] / curve.x.coeffs[3]
    vals = []
    for c in crit:
        # fold height minus third-strand height, as a polynomial in the
        # critical parameter (the third root of x(z) = x(c) is s - 2c)
        passer = curve.y.compose(Polynomial([sum_roots, -2]))
        h = curve.y - passer
        sg = sign_at_root(h, c)
        if sg == 0:
            raise NonNodalError("fold pair meets the third strand")
        # the local minimum of x (positive second derivative) bounds the
        # band on the left
        concavity = sign_at_root(curve.x.derivative().derivative(), c)
        vals.append((concavity, BOTTOM if sg < 0 else TOP))
    left = next(s for k, s in vals if k > 0)
    right = next(s for k, s in vals if k < 0)
    return left, right


def word_from_curve(curve: PlaneCurve, cs: Optional[CrossingSet] = None) -> PlaneWord:
    """Run-length word of the curve's diagram.

    The presentation is normalized through the vertical-flip freedom:
    boundary zeros appear exactly when a turning point sits on the same
    side as its nearest crossing.
    """
    if cs is None:
        cs = curve_crossings(curve)
    letters = [c.letter for c in cs.crossings]
    left, right = _fold_sides(curve)
    if not letters:
        return PlaneWord(())
    lead_marker = left == letters[0]
    trail_marker = right == letters[-1]
    if (letters[0] == TOP) != lead_marker:
        letters = [1 - p for p in letters]
    return PlaneWord(letters_to_runs(letters, trail_marker))


def add_triple_point(curve: PlaneCurve, x0: Fraction, yshift: Fraction) -> PlaneCurve:
    """(x, y) -> (x, (x - x0)(y + yshift)): same nodes plus a triple
    point where the line x = x0 meets the shifted curve."""
    x0, yshift = Fraction(x0), Fraction(yshift)
    line = curve.x - Polynomial.const(x0)
    if len(isolate_real_roots(line)) != 3:
        raise NonNodalError(f"x = {x0} does not meet the curve in three strands")
    shifted = curve.y + Polynomial.const(yshift)
    if line.gcd(shifted).degree >= 1:
        raise NonNodalError(f"a strand over x = {x0} has zero shifted height")
    el = _Eliminator(curve)
    cs = curve_crossings(curve)
    for c in cs.crossings:
        if sign_at_root(el.x_of_u - Polynomial.const(x0), c.u) == 0:
            raise NonNodalError(f"x = {x0} passes through a crossing")
    return PlaneCurve(curve.x, line * shifted)


def perturb(curve: PlaneCurve, eps: Fraction) -> PlaneCurve:
    """Reparametrize the x-coordinate by t -> t + eps, keeping y."""
    if eps == 0:
        raise ValueError("eps must be nonzero")
    return PlaneCurve(curve.x.shift(Fraction(eps)), curve.y)


def perturb_auto(
    curve: PlaneCurve,
    positive: bool = True,
    start: Fraction = Fraction(1, 16),
    expect_nodes: Optional[int] = None,
) -> tuple[PlaneCurve, Fraction]:
    """Perturb with automatically chosen eps.

    Halves eps from ``start`` until the crossing count hits the expected
    node count and the extracted word agrees twice in a row.
    """
    eps = Fraction(start) if positive else -Fraction(start)
    last_word = None
    for _ in range(24):
        cand = perturb(curve, eps)
        try:
            cs = curve_crossings(cand)
            if expect_nodes is not None and len(cs) != expect_nodes:
                raise NonNodalError("wrong node count")
            word = word_from_curve(cand, cs)
        except NonNodalError:
            eps /= 2
            last_word = None
            continue
        if last_word is not None and word.runs == last_word:
            return cand, eps
        last_word = word.runs
        eps /= 2
    raise NonNodalError("perturbation did not stabilize")
