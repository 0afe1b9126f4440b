"""Schubert fraction arithmetic and the two-bridge knot catalog.

A two-bridge link is classified by its Schubert fraction alpha/beta with
alpha >= 0 and gcd(alpha, beta) = 1.  Two fractions denote isotopic links
iff the alphas agree and beta' = beta^(+-1) (mod alpha); allowing in
addition beta' = -beta^(+-1) identifies a knot with its mirror image.
alpha is odd for a knot and even for a two-component link.

Continued fractions [m_1, ..., m_k] = m_1 + 1/(m_2 + 1/(... + 1/m_k)) are
evaluated through the 2x2 integer matrix recurrence, so zero and +-1
entries need no special casing and no division ever happens.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from importlib import resources
from math import gcd
from typing import Iterator, Optional, Sequence


class DegenerateFractionError(ValueError):
    """Raised when an operation needs alpha >= 2 but got an unknot/empty class."""


@dataclass(frozen=True)
class SchubertFraction:
    """A Schubert fraction alpha/beta in canonical form.

    ``alpha >= 0`` and, when ``alpha >= 2``, ``beta`` is reduced into
    ``[1, alpha - 1]``.  ``negative`` records the sign of the fraction
    before normalization; the canonical residue already determines the
    knot (including chirality), the flag only answers mirror-sensitive
    questions about how the fraction was originally written and stays
    out of equality.
    """

    alpha: int
    beta: int
    negative: bool = field(default=False, compare=False)

    @classmethod
    def make(cls, p: int, q: int) -> "SchubertFraction":
        """Normalize the rational p/q (q may be negative or zero for 1/0)."""
        if p == 0 and q == 0:
            raise ValueError("0/0 is not a fraction")
        neg = (p < 0) != (q < 0)
        p, q = abs(p), q if p >= 0 else -q
        # carry the sign on q so that alpha stays nonnegative
        if p < 0:
            p, q = -p, -q
        g = gcd(p, abs(q)) or 1
        p //= g
        q //= g
        if p == 0:
            return cls(0, 1, neg)
        if p == 1:
            return cls(1, 0, neg)
        return cls(p, q % p, neg)

    def __str__(self) -> str:
        return f"{self.alpha}/{self.beta}"

    @property
    def is_knot(self) -> bool:
        return self.alpha % 2 == 1

    @property
    def is_link(self) -> bool:
        return self.alpha % 2 == 0


def parse_fraction(text: str) -> SchubertFraction:
    """Parse 'A/B' or a bare integer 'A' (meaning A/1)."""
    text = text.strip()
    if "/" in text:
        a, b = text.split("/", 1)
        return SchubertFraction.make(int(a), int(b))
    return SchubertFraction.make(int(text), 1)


def cf_eval(seq: Sequence[int]) -> SchubertFraction:
    """Evaluate the continued fraction [m_1, ..., m_k].

    Uses p_i = m_i p_{i-1} + p_{i-2}, q_i = m_i q_{i-1} + q_{i-2} with
    (p_0, q_0) = (1, 0) and (p_{-1}, q_{-1}) = (0, 1).  Total on any
    nonempty integer sequence, zeros included.
    """
    if not seq:
        raise ValueError("empty continued fraction")
    p_prev, q_prev = 0, 1
    p, q = 1, 0
    for m in seq:
        p, p_prev = m * p + p_prev, p
        q, q_prev = m * q + q_prev, q
    return SchubertFraction.make(p, q)


def cf_eval_pair(seq: Sequence[int]) -> tuple[int, int]:
    """Raw convergent (p_k, q_k) of [m_1, ..., m_k], unnormalized."""
    if not seq:
        raise ValueError("empty continued fraction")
    p_prev, q_prev = 0, 1
    p, q = 1, 0
    for m in seq:
        p, p_prev = m * p + p_prev, p
        q, q_prev = m * q + q_prev, q
    return p, q


def cf_expand_positive(f: SchubertFraction) -> tuple[int, ...]:
    """All-positive continued fraction expansion of alpha/beta.

    Euclidean expansion of the canonical representative; the last entry
    is >= 2 whenever the expansion has more than one term, which makes
    the expansion unique.  cf_eval of the result returns f exactly.
    """
    if f.alpha <= 1:
        raise DegenerateFractionError(f"{f} has no positive expansion (alpha <= 1)")
    a, b = f.alpha, f.beta
    if b <= 0 or b >= a:
        raise DegenerateFractionError(f"{f} is not in canonical position 1 <= beta < alpha")
    out: list[int] = []
    while b:
        out.append(a // b)
        a, b = b, a % b
    return tuple(out)


def _inverse_mod(b: int, a: int) -> Optional[int]:
    """Inverse of b modulo a by extended Euclid, or None if not coprime."""
    if a <= 0:
        return None
    r0, r1 = a, b % a
    s0, s1 = 0, 1
    while r1:
        k = r0 // r1
        r0, r1 = r1, r0 - k * r1
        s0, s1 = s1, s0 - k * s1
    if r0 != 1:
        return None
    return s0 % a


def fraction_equivalent(
    f1: SchubertFraction, f2: SchubertFraction, include_mirror: bool = False
) -> bool:
    """Two-bridge equivalence: alpha equal and beta' = beta^(+-1) (mod alpha).

    With ``include_mirror`` the classes beta' = -beta^(+-1) are accepted
    as well, identifying mirror images.
    """
    if f1.alpha != f2.alpha:
        return False
    a = f1.alpha
    if a == 0:
        return True
    if a == 1:
        return True
    b1, b2 = f1.beta, f2.beta
    accepted = {b1 % a}
    inv = _inverse_mod(b1, a)
    if inv is not None:
        accepted.add(inv)
    if include_mirror:
        accepted |= {(-b) % a for b in tuple(accepted)}
    return b2 % a in accepted


@dataclass(frozen=True)
class KnotRecord:
    """One row of the two-bridge catalog."""

    name: str
    fraction: SchubertFraction
    crossing_number: int
    degC_b: int
    degC_c: int
    lex_b: int
    lex_c_lo: int
    lex_c_hi: int

    @property
    def lex_exact(self) -> bool:
        return self.lex_c_lo == self.lex_c_hi


class Catalog:
    """The shipped table of two-bridge knots with eight or fewer crossings."""

    def __init__(self, records: Sequence[KnotRecord]):
        self.records = list(records)
        self._by_name = {r.name: r for r in self.records}

    @classmethod
    def load(cls, path: Optional[str] = None) -> "Catalog":
        if path is None:
            text = resources.files("lexiknot.data").joinpath("knots.csv").read_text()
            rows = list(csv.DictReader(text.splitlines()))
        else:
            with open(path, newline="") as fh:
                rows = list(csv.DictReader(fh))
        records = [
            KnotRecord(
                name=row["name"],
                fraction=SchubertFraction.make(int(row["alpha"]), int(row["beta"])),
                crossing_number=int(row["N"]),
                degC_b=int(row["degC_b"]),
                degC_c=int(row["degC_c"]),
                lex_b=int(row["lex_b"]),
                lex_c_lo=int(row["lex_c_lo"]),
                lex_c_hi=int(row["lex_c_hi"]),
            )
            for row in rows
        ]
        return cls(records)

    def __iter__(self) -> Iterator[KnotRecord]:
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)

    def get(self, name: str) -> KnotRecord:
        return self._by_name[name]

    def names(self) -> list[str]:
        return [r.name for r in self.records]

    def lookup(self, f: SchubertFraction) -> Optional[KnotRecord]:
        """Find the record equivalent to f, mirror images included."""
        for rec in self.records:
            if fraction_equivalent(rec.fraction, f, include_mirror=True):
                return rec
        return None


_DEFAULT_CATALOG: Optional[Catalog] = None


def default_catalog() -> Catalog:
    global _DEFAULT_CATALOG
    if _DEFAULT_CATALOG is None:
        _DEFAULT_CATALOG = Catalog.load()
    return _DEFAULT_CATALOG


def catalog_lookup(f: SchubertFraction) -> Optional[KnotRecord]:
    return default_catalog().lookup(f)


def record_for_fraction(f: SchubertFraction) -> KnotRecord:
    """Catalog record for f, or a synthetic one for off-catalog knots.

    The synthetic record carries the crossing number of the alternating
    normal form; the degree columns are left at zero since nothing is
    tabulated for it.
    """
    if f.is_link:
        raise DegenerateFractionError(f"{f} has even numerator: a two-component link")
    if f.alpha <= 1:
        raise DegenerateFractionError(f"{f} is the unknot")
    rec = catalog_lookup(f)
    if rec is not None:
        return rec
    n = sum(cf_expand_positive(f))
    return KnotRecord(
        name=str(f),
        fraction=f,
        crossing_number=n,
        degC_b=0,
        degC_c=0,
        lex_b=0,
        lex_c_lo=0,
        lex_c_hi=0,
    )
