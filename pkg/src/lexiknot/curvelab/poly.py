"""Exact univariate polynomials over the rationals with certified real roots.

Coefficients are `fractions.Fraction`; every sign decision goes through
Sturm sequences or interval bisection with rational endpoints, never
through floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence, Union

Rat = Union[int, Fraction]


def _frac(x: Rat) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Polynomial:
    """Polynomial with exact rational coefficients, ascending degree."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Rat]):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- construction -------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls([])

    @classmethod
    def const(cls, c: Rat) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: Rat = 1) -> "Polynomial":
        return cls([0] * degree + [c])

    @classmethod
    def from_roots(cls, roots: Sequence[Rat], lead: Rat = 1) -> "Polynomial":
        p = cls.const(lead)
        for r in roots:
            p = p * cls([-_frac(r), 1])
        return p

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """Comma-separated rationals, ascending: '0,-3,0,1' is t^3 - 3t."""
        return cls([Fraction(tok) for tok in text.replace(" ", "").split(",") if tok])

    # -- basics --------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: Rat) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*t" if c != 1 else "t")
            else:
                parts.append(f"{c}*t^{k}" if c != 1 else f"t^{k}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- algebra -------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    def scale(self, c: Rat) -> "Polynomial":
        return Polynomial([_frac(c) * a for a in self.coeffs])

    def derivative(self) -> "Polynomial":
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def shift(self, eps: Rat) -> "Polynomial":
        """p(t + eps), exactly."""
        out = Polynomial.zero()
        for c in reversed(self.coeffs):
            out = out * Polynomial([_frac(eps), 1]) + Polynomial.const(c)
        return out

    def compose(self, inner: "Polynomial") -> "Polynomial":
        out = Polynomial.zero()
        for c in reversed(self.coeffs):
            out = out * inner + Polynomial.const(c)
        return out

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        r = list(self.coeffs)
        d, lc = other.degree, other.lead
        while len(r) - 1 >= d and any(c != 0 for c in r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d:
                break
            k = len(r) - 1 - d
            f = r[-1] / lc
            q[k] = f
            for i, c in enumerate(other.coeffs):
                r[k + i] -= f * c
            r.pop()
        return Polynomial(q), Polynomial(r)

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[1]

    def gcd(self, other: "Polynomial") -> "Polynomial":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        if a.is_zero():
            return a
        return a.scale(1 / a.lead)

    def squarefree_part(self) -> "Polynomial":
        if self.degree <= 1:
            return self
        g = self.gcd(self.derivative())
        if g.degree <= 0:
            return self
        return self.divmod(g)[0]


def chebyshev(n: int) -> Polynomial:
    """T_n with integer coefficients via T_{n+1} = 2 t T_n - T_{n-1}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    t0, t1 = Polynomial.const(1), Polynomial([0, 1])
    if n == 0:
        return t0
    for _ in range(n - 1):
        t0, t1 = t1, Polynomial([0, 2]) * t1 - t0
    return t1


# ---------------------------------------------------------------------------
# Sturm machinery


def sturm_sequence(p: Polynomial) -> list[Polynomial]:
    p = p.squarefree_part()
    seq = [p, p.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        seq.append(-(seq[-2] % seq[-1]))
    if seq[-1].is_zero():
        seq.pop()
    return seq


def _variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a * b < 0)


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def count_roots(p: Polynomial, lo: Fraction, hi: Fraction, seq=None) -> int:
    """Distinct real roots in (lo, hi]."""
    if seq is None:
        seq = sturm_sequence(p)
    v_lo = _variations([_sign(q(lo)) for q in seq])
    v_hi = _variations([_sign(q(hi)) for q in seq])
    return v_lo - v_hi


def root_bound(p: Polynomial) -> Fraction:
    """Cauchy bound: all real roots lie in (-B, B)."""
    if p.degree < 1:
        return Fraction(1)
    lc = abs(p.lead)
    return Fraction(1) + max(abs(c) / lc for c in p.coeffs[:-1])


@dataclass(frozen=True)
class RootInterval:
    """Open isolating interval (lo, hi) of a simple real root of poly."""

    poly: Polynomial
    lo: Fraction
    hi: Fraction

    def refine(self, times: int = 1) -> "RootInterval":
        lo, hi = self.lo, self.hi
        s_lo = _sign(self.poly(lo))
        for _ in range(times):
            mid = (lo + hi) / 2
            s_mid = _sign(self.poly(mid))
            if s_mid == 0:
                # land exactly on the root: shrink symmetrically around it
                w = (hi - lo) / 8
                lo, hi = mid - w, mid + w
                s_lo = _sign(self.poly(lo))
                continue
            if s_lo * s_mid < 0:
                hi = mid
            else:
                lo, hi = mid, hi
                s_lo = s_mid
        return RootInterval(self.poly, lo, hi)

    def refine_below(self, width: Fraction) -> "RootInterval":
        r = self
        while r.hi - r.lo >= width:
            r = r.refine()
        return r

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self) -> float:
        return float(self.mid)


def isolate_real_roots(p: Polynomial) -> list[RootInterval]:
    """Disjoint isolating intervals for all distinct real roots,
    endpoints rational non-roots, sorted increasingly."""
    p = p.squarefree_part()
    if p.degree < 1:
        return []
    seq = sturm_sequence(p)
    bound = root_bound(p)
    lo, hi = -bound, bound
    while p(lo) == 0:
        lo -= 1
    while p(hi) == 0:
        hi += 1
    out: list[tuple[Fraction, Fraction]] = []

    def rec(a: Fraction, b: Fraction, n: int) -> None:
        if n == 0:
            return
        if n == 1:
            out.append((a, b))
            return
        mid = (a + b) / 2
        while p(mid) == 0:
            mid = (a + mid) / 2
        rec(a, mid, count_roots(p, a, mid, seq))
        rec(mid, b, count_roots(p, mid, b, seq))

    rec(lo, hi, count_roots(p, lo, hi, seq))
    out.sort()
    return [RootInterval(p, a, b) for a, b in out]


def sign_at_root(h: Polynomial, root: RootInterval, max_refine: int = 256) -> int:
    """Exact sign of h at the root isolated by ``root`` (0 if h vanishes there)."""
    if h.is_zero():
        return 0
    g = h.gcd(root.poly)
    if g.degree >= 1 and count_roots(g, root.lo, root.hi) > 0:
        return 0
    seq = sturm_sequence(h)
    r = root
    for _ in range(max_refine):
        if h(r.lo) != 0 and h(r.hi) != 0 and count_roots(h, r.lo, r.hi, seq) == 0:
            return _sign(h(r.lo))
        r = r.refine()
    raise RuntimeError("sign refinement did not converge")


def sqrt_bounds(x: Fraction, scale: int = 1 << 32) -> tuple[Fraction, Fraction]:
    """Rational lo <= sqrt(x) <= hi with hi - lo about 1/scale."""
    if x < 0:
        raise ValueError("negative radicand")
    n, d = x.numerator, x.denominator
    r = isqrt(n * d * scale * scale)
    return Fraction(r, d * scale), Fraction(r + 1, d * scale)
