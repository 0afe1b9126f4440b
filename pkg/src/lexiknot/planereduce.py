"""Plane trigonal words, the reduction R, and lexicographic-degree verdicts.

A plane word records the run lengths of the crossings of an unsigned
trigonal curve, alternating between the two crossing positions.  A
single zero at either end is significant: it marks that the word starts
or ends at the other position (the turning points of the cubic sit on
the other side of the strand they do in the zero-free form).  Interior
zeros and doubled boundary zeros are empty regions and collapse away.
Reflecting the curve vertically swaps the two crossing positions and
both turning-point sides at once, so it fixes every word: the encoding
is already flip-invariant, and reversal is the only residual symmetry.

The reduction R rewrites (u, m+1, 1, n+1, v) -> (u, m, n, v), removing
three crossings; a nodal curve of bidegree (3, d) realizing the left
word exists iff one of bidegree (3, d-3) realizes the right word, so
every R step is worth exactly 3 in the y-degree, in both directions.
A boundary variant (2, a, y) -> (0, a-1, y) applies the same reduction
across the left turning point of the cubic; it is what the degree
accounting of the results table exercises on words without interior
single-crossing runs.

Cost-free identifications between realizable words: reversal (a
parameter sign change preserves degrees), the braid exchange on three
consecutive alternating crossings (perturb the triple point both ways),
and a small curated list of whole-word identities read off explicit
low-degree curves: (2,2) ~ (1,1,1,1), (3) ~ (1,1,1), (0,2) ~ (0,1,1),
and the merging of all one-crossing words.  Sub-word use of the curated
identities is unsound (it would collapse word classes with different
minimal degrees), so they apply to whole words only; the degree
arithmetic additionally leaves braid exchanges to the word-class
matcher, whose identifications are not fed back into bounds.
"""

from __future__ import annotations

import csv
from collections import deque
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Optional, Sequence

from .arith import KnotRecord
from .diagram import TrigonalDiagram
from .enumeration import (
    DegreeTriple,
    chebyshev_degree,
    enumerate_simple_diagrams,
    table_budget,
)

Runs = tuple[int, ...]


class MoveError(ValueError):
    """A rewrite was requested at a position where its pattern does not match."""


# ---------------------------------------------------------------------------
# words and normalization


@dataclass(frozen=True)
class PlaneWord:
    """Run-length word of an unsigned plane trigonal diagram."""

    runs: Runs

    def __init__(self, runs: Sequence[int]):
        runs = tuple(int(r) for r in runs)
        if any(r < 0 for r in runs):
            raise ValueError("run lengths are nonnegative")
        object.__setattr__(self, "runs", runs)

    def __str__(self) -> str:
        return "(" + ",".join(str(r) for r in self.runs) + ")" if self.runs else "()"

    @classmethod
    def parse(cls, text: str) -> "PlaneWord":
        toks = [t for t in text.replace(" ", "").split(",") if t]
        return cls([int(t) for t in toks])

    @property
    def crossings(self) -> int:
        return sum(self.runs)

    def normalized(self) -> "PlaneWord":
        return PlaneWord(normalize_runs(self.runs))

    def canonical(self) -> "PlaneWord":
        return PlaneWord(canonical_runs(self.runs))


def normalize_runs(runs: Runs) -> Runs:
    """Collapse interior zeros and doubled boundary zeros."""
    runs = tuple(runs)
    changed = True
    while changed:
        changed = False
        if len(runs) >= 2 and runs[0] == 0 and runs[1] == 0:
            runs = runs[2:]
            changed = True
            continue
        if len(runs) >= 2 and runs[-1] == 0 and runs[-2] == 0:
            runs = runs[:-2]
            changed = True
            continue
        for i in range(1, len(runs) - 1):
            if runs[i] == 0:
                runs = runs[: i - 1] + (runs[i - 1] + runs[i + 1],) + runs[i + 2 :]
                changed = True
                break
    if runs == (0,):
        return ()
    return runs


def word_images(runs: Runs) -> list[Runs]:
    """The degree-preserving images of a word: itself and its reversal."""
    runs = normalize_runs(runs)
    return [runs, runs[::-1]]


def canonical_runs(runs: Runs) -> Runs:
    return min(word_images(runs), key=lambda r: (len(r), r))


def runs_to_letters(runs: Runs) -> tuple[int, ...]:
    """Crossing positions in x-order: 0 for odd slots, 1 for even slots."""
    out: list[int] = []
    for i, r in enumerate(runs):
        out.extend([i % 2] * r)
    return tuple(out)


def letters_to_runs(letters: Sequence[int], trail0: bool) -> Runs:
    """Run word of a crossing-position sequence.

    The leading zero is structural (present exactly when the first
    crossing sits in the even position); the trailing marker is the
    extra bit a word carries beyond its letters.
    """
    runs: list[int] = []
    prev = None
    for p in letters:
        if p == prev:
            runs[-1] += 1
        else:
            if not runs and p == 1:
                runs.append(0)
            runs.append(1)
            prev = p
    if trail0:
        runs.append(0)
    return normalize_runs(tuple(runs))


def project(d: TrigonalDiagram) -> PlaneWord:
    """Unsigned projection |D|: the absolute values of the entries."""
    return PlaneWord(tuple(abs(m) for m in d.entries))


# ---------------------------------------------------------------------------
# moves


def apply_R(w: PlaneWord, i: int) -> PlaneWord:
    """Reduction R at run index i: (.., a, 1, b, ..) -> (.., a-1, b-1, ..)."""
    runs = w.runs
    if not (0 <= i <= len(runs) - 3):
        raise MoveError(f"no room for the R pattern at index {i} of {w}")
    if runs[i] < 1 or runs[i + 1] != 1 or runs[i + 2] < 1:
        raise MoveError(f"R pattern (>=1, 1, >=1) absent at index {i} of {w}")
    out = runs[:i] + (runs[i] - 1, runs[i + 2] - 1) + runs[i + 3 :]
    return PlaneWord(normalize_runs(out))


def apply_boundary_R(w: PlaneWord) -> PlaneWord:
    """Boundary reduction (2, a, y) -> (0, a-1, y)."""
    runs = w.runs
    if len(runs) < 2 or runs[0] != 2 or runs[1] < 1:
        raise MoveError(f"boundary pattern (2, >=1, ...) absent in {w}")
    out = (0, runs[1] - 1) + runs[2:]
    return PlaneWord(normalize_runs(out))


def inverse_R(w: PlaneWord, split: tuple[int, int], branch: str) -> PlaneWord:
    """Insert three crossings: the two ways a resolved triple point splits.

    ``split = (i, m)`` divides run i into m + n.  Branch A produces
    (u, m+1, 1, n+1, v), branch B produces (u, m, 1, 1, 1, n, v); the
    crossing count rises by exactly 3 either way, and R at the
    insertion point takes both branches to the same word, the original
    with the split run reopened into the adjacent pair (m, n).
    """
    i, m = split
    runs = w.runs
    if not (0 <= i < len(runs)):
        raise MoveError(f"run index {i} out of range for {w}")
    if not (0 <= m <= runs[i]):
        raise MoveError(f"cannot take {m} crossings out of run {runs[i]}")
    n = runs[i] - m
    u, v = runs[:i], runs[i + 1 :]
    if branch == "A":
        return PlaneWord(u + (m + 1, 1, n + 1) + v)
    if branch == "B":
        return PlaneWord(u + (m, 1, 1, 1, n) + v)
    raise MoveError(f"unknown branch {branch!r}")


# whole-word identities between realizable words of equal degree
_IDENTITIES: list[set[Runs]] = [
    {(2, 2), (1, 1, 1, 1)},
    {(3,), (1, 1, 1)},
    {(0, 2), (0, 1, 1)},
    {(1,), (0, 1), (0, 1, 0)},  # all one-crossing words share their minimal curve
]


def _identity_partners(runs: Runs) -> set[Runs]:
    out: set[Runs] = set()
    for group in _IDENTITIES:
        group_all: set[Runs] = set()
        for g in group:
            group_all.update(word_images(g))
        if runs in group_all:
            out |= group_all - {runs}
    return out


def _braid_rewrites(runs: Runs) -> set[Runs]:
    """Exchange three consecutive alternating crossings: aba -> bab.

    When the rewrite moves the last crossing to the other position the
    trailing marker toggles with it (the turning point stays put).
    """
    letters = runs_to_letters(runs)
    trail0 = bool(runs) and runs[-1] == 0
    out: set[Runs] = set()
    for j in range(len(letters) - 2):
        a, b, c = letters[j : j + 3]
        if a == c != b:
            new = letters[:j] + (b, a, b) + letters[j + 3 :]
            new_trail0 = trail0 ^ (new[-1] != letters[-1])
            out.add(letters_to_runs(new, new_trail0))
    return out


def neighbors(w: PlaneWord) -> set[PlaneWord]:
    """Cost-free moves: normalization, reversal, braid exchanges, and
    the curated whole-word identities."""
    base = normalize_runs(w.runs)
    out: set[Runs] = set()
    for img in word_images(base):
        out.add(img)
        out |= _identity_partners(img)
        out |= _braid_rewrites(img)
    out.discard(w.runs)
    return {PlaneWord(r) for r in out}


# ---------------------------------------------------------------------------
# base degrees


@dataclass(frozen=True)
class BaseEntry:
    runs: Runs
    b_exact: Optional[int]
    b_lower: int
    source: str


class BaseTable:
    """Known lexicographic data of fully reduced words, keyed by canonical class."""

    def __init__(self, entries: Iterable[BaseEntry], overrides: Iterable[BaseEntry]):
        self.entries: dict[Runs, BaseEntry] = {}
        for e in entries:
            self.entries[canonical_runs(e.runs)] = e
        self.overrides: dict[Runs, BaseEntry] = {}
        for e in overrides:
            self.overrides[canonical_runs(e.runs)] = e

    @classmethod
    def load(cls) -> "BaseTable":
        def parse_runs(text: str) -> Runs:
            return tuple(int(t) for t in text.split("|") if t != "")

        base_text = resources.files("lexiknot.data").joinpath("bases.csv").read_text()
        entries = [
            BaseEntry(
                runs=parse_runs(row["runs"]),
                b_exact=int(row["b_exact"]) if row["b_exact"] else None,
                b_lower=int(row["b_lower"]),
                source=row["source"],
            )
            for row in csv.DictReader(base_text.splitlines())
        ]
        ov_text = resources.files("lexiknot.data").joinpath("bounds_overrides.csv").read_text()
        overrides = [
            BaseEntry(
                runs=parse_runs(row["runs"]),
                b_exact=None,
                b_lower=int(row["b_lower"]),
                source=f"table row {row['table_row']}",
            )
            for row in csv.DictReader(ov_text.splitlines())
        ]
        return cls(entries, overrides)

    def lookup(self, runs: Runs) -> Optional[BaseEntry]:
        key = canonical_runs(runs)
        if key in self.overrides:
            named = self.entries.get(key)
            ov = self.overrides[key]
            if named is not None and named.b_lower > ov.b_lower:
                return named
            return ov
        return self.entries.get(key)


_BASE_TABLE: Optional[BaseTable] = None


def base_table() -> BaseTable:
    global _BASE_TABLE
    if _BASE_TABLE is None:
        _BASE_TABLE = BaseTable.load()
    return _BASE_TABLE


def _crossing_rule(n: int) -> int:
    # a nodal (3,b) curve has at most b-1 crossings, and b is never a
    # multiple of 3 for a trigonal parametrization
    b = n + 1
    if b % 3 == 0:
        b += 1
    return b


def _two_run_exact(runs: Runs) -> Optional[int]:
    """Exact degree floor((3N-1)/2) of torus and twist words.

    Applies to words of one or two positive runs without boundary zeros
    whose alternating diagram is a knot (odd continued-fraction
    numerator); those are the words with a known exact realization.
    """
    runs = normalize_runs(runs)
    if not runs or 0 in runs or len(runs) > 2:
        return None
    if len(runs) == 1:
        alpha = runs[0]
    else:
        alpha = runs[0] * runs[1] + 1
    if alpha % 2 == 0:
        return None
    n = sum(runs)
    return (3 * n - 1) // 2


def _base_lower(runs: Runs) -> tuple[int, str]:
    """Best known lower bound for a single word, without searching."""
    best = _crossing_rule(sum(runs))
    prov = f"crossings+1 past multiples of 3 ({best})"
    entry = base_table().lookup(runs)
    if entry is not None and entry.b_lower >= best:
        best, prov = entry.b_lower, f"base table {entry.source}"
    two = _two_run_exact(runs)
    if two is not None and two >= best:
        best, prov = two, "one/two-run exact degree"
    return best, prov


def _base_exact(runs: Runs) -> Optional[int]:
    entry = base_table().lookup(runs)
    if entry is not None and entry.b_exact is not None:
        return entry.b_exact
    return _two_run_exact(runs)


def _base_kind(runs: Runs) -> int:
    # preference order when traces tie: named entries, then the
    # one/two-run family, then anything else
    if base_table().lookup(runs) is not None:
        return 0
    if _two_run_exact(runs) is not None:
        return 1
    return 2


# ---------------------------------------------------------------------------
# reduction search


@dataclass(frozen=True)
class ReductionTrace:
    """A replayable chain of moves from a word down to its base."""

    source: PlaneWord
    steps: tuple[tuple[str, int, int], ...]  # (kind, image index, position)
    base: PlaneWord
    cost: int
    bound: int
    provenance: str

    def replay(self) -> PlaneWord:
        w = canonical_runs(self.source.runs)
        for kind, img_idx, pos in self.steps:
            word = PlaneWord(word_images(w)[img_idx])
            if kind == "R":
                w = canonical_runs(apply_R(word, pos).runs)
            elif kind == "Rb":
                w = canonical_runs(apply_boundary_R(word).runs)
            else:
                targets = sorted(_identity_partners(word.runs))
                w = canonical_runs(targets[pos])
        return PlaneWord(w)


@dataclass
class _SearchState:
    cost: int
    parent: Optional[Runs]
    move: Optional[tuple[str, int, int]]


def _explore(w: PlaneWord, depth: Optional[int] = None) -> dict[Runs, _SearchState]:
    """0/3-cost BFS over canonical word classes reachable from w.

    The cost-free layer uses only the curated whole-word identities (the
    ones with explicit curves behind them), keeping every degree claim
    anchored; braid exchanges stay out of the bound arithmetic.
    """
    start = canonical_runs(w.runs)
    states: dict[Runs, _SearchState] = {start: _SearchState(0, None, None)}
    queue: deque[Runs] = deque([start])
    while queue:
        cur = queue.popleft()
        cur_cost = states[cur].cost
        for img_idx, img in enumerate(word_images(cur)):
            word = PlaneWord(img)
            # cost-free rewrites; index into the sorted target list for replay
            targets = sorted(_identity_partners(img))
            for pos, tgt in enumerate(targets):
                key = canonical_runs(tgt)
                if key not in states or states[key].cost > cur_cost:
                    states[key] = _SearchState(cur_cost, cur, ("ident", img_idx, pos))
                    queue.appendleft(key)
            if depth is not None and cur_cost // 3 >= depth:
                continue
            moves: list[tuple[tuple[str, int, int], PlaneWord]] = []
            for i in range(len(img) - 2):
                if img[i] >= 1 and img[i + 1] == 1 and img[i + 2] >= 1:
                    moves.append((("R", img_idx, i), apply_R(word, i)))
            if len(img) >= 2 and img[0] == 2 and img[1] >= 1:
                moves.append((("Rb", img_idx, 0), apply_boundary_R(word)))
            for move, nxt in moves:
                key = canonical_runs(nxt.runs)
                ncost = cur_cost + 3
                if key not in states or states[key].cost > ncost:
                    states[key] = _SearchState(ncost, cur, move)
                    queue.append(key)
    return states


def _trace_to(w: PlaneWord, states: dict[Runs, _SearchState], target: Runs) -> ReductionTrace:
    steps: list[tuple[str, int, int]] = []
    cur: Optional[Runs] = target
    while cur is not None:
        st = states[cur]
        if st.move is not None:
            steps.append(st.move)
        cur = st.parent
    steps.reverse()
    bound, prov = _base_lower(target)
    return ReductionTrace(
        source=w.normalized(),
        steps=tuple(steps),
        base=PlaneWord(target),
        cost=states[target].cost,
        bound=bound + states[target].cost,
        provenance=prov,
    )


def reduction_search(w: PlaneWord, depth: Optional[int] = None) -> ReductionTrace:
    """Best provable reduction of w.

    Every R step is worth exactly 3 in degree in both directions, so any
    reachable word gives the valid bound (its own lower bound) + cost;
    the search keeps the largest.  A word that is itself a base (named
    entry or a one/two-run word) stays put: its own value is already the
    strongest consistent bound.  Ties prefer bases with named table
    entries, then fewer crossings, then shorter words, then fewer steps.
    """
    start = canonical_runs(w.runs)
    if _base_kind(start) <= 1:
        return _trace_to(w, {start: _SearchState(0, None, None)}, start)
    states = _explore(w, depth)

    def rank(item: tuple[Runs, _SearchState]):
        runs, st = item
        score = _base_lower(runs)[0] + st.cost
        return (-score, _base_kind(runs), sum(runs), len(runs), st.cost, runs)

    best_runs, _ = min(states.items(), key=rank)
    return _trace_to(w, states, best_runs)


def constructive_upper(w: PlaneWord, depth: Optional[int] = None) -> Optional[int]:
    """Least degree of an explicit curve for w via reductions to
    realizable bases (each undone R step costs exactly 3)."""
    states = _explore(w, depth)
    best: Optional[int] = None
    for runs, st in states.items():
        exact = _base_exact(runs)
        if exact is not None:
            cand = exact + st.cost
            if best is None or cand < best:
                best = cand
    return best


def _boundary_slides(runs: Runs) -> set[Runs]:
    """Slide the outermost crossing around its adjacent turning point.

    Word-normalization move only (it feeds the class matcher, never the
    degree arithmetic): the boundary crossing changes position while the
    turning point moves with it, keeping the boundary marker."""
    letters = runs_to_letters(runs)
    if not letters:
        return set()
    trail0 = bool(runs) and runs[-1] == 0
    out = {
        letters_to_runs((letters[0],) + tuple(1 - p for p in letters[1:]), trail0),
        letters_to_runs(letters[:-1] + (1 - letters[-1],), trail0),
    }
    out.discard(normalize_runs(runs))
    return out


def same_word_class(w1: PlaneWord, w2: PlaneWord) -> bool:
    """Whether two words are linked by crossing-preserving normalization
    moves (curated identities, braid exchanges, boundary slides)."""
    start = canonical_runs(w1.runs)
    target = canonical_runs(w2.runs)
    if start == target:
        return True
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for img in word_images(cur):
            for tgt in _identity_partners(img) | _braid_rewrites(img) | _boundary_slides(img):
                key = canonical_runs(tgt)
                if key == target:
                    return True
                if key not in seen:
                    seen.add(key)
                    queue.append(key)
    return False


# ---------------------------------------------------------------------------
# bounds and verdicts


def b_lower_bound(w: PlaneWord, depth: Optional[int] = None) -> tuple[int, str]:
    """Max of the crossing rule, the one/two-run exact value, reduction
    bounds, and table overrides, with the rule that fired."""
    best, prov = _base_lower(normalize_runs(w.runs))
    trace = reduction_search(w, depth)
    if trace.bound > best:
        best = trace.bound
        prov = f"reduction to {trace.base} ({trace.provenance}) + {trace.cost}"
    return best, prov


@dataclass
class DegreeReport:
    knot: KnotRecord
    b_lower: int
    b_upper: int
    c_lower: int
    c_upper: int
    status: str  # "exact" | "range"
    deg_C: DegreeTriple
    diagrams: list[TrigonalDiagram] = field(default_factory=list)
    traces: list[ReductionTrace] = field(default_factory=list)
    witnesses: list[str] = field(default_factory=list)

    @property
    def starred(self) -> bool:
        return self.b_upper < self.deg_C.b or (
            self.b_upper == self.deg_C.b and self.c_upper < self.deg_C.c
        )


def degree_verdict(k: KnotRecord) -> DegreeReport:
    """Assemble lower and upper degree bounds for one catalog knot."""
    n = k.crossing_number
    cheb = chebyshev_degree(k)
    diagrams = enumerate_simple_diagrams(k, budget=table_budget(k))

    b_lower = None
    b_upper = cheb.b
    witnesses = [f"Chebyshev C(3,{cheb.b})"]
    traces = []
    for d in diagrams:
        w = project(d)
        lo, prov = b_lower_bound(w)
        trace = reduction_search(w)
        traces.append(trace)
        if b_lower is None or lo < b_lower:
            b_lower = lo
        up = constructive_upper(w)
        if up is not None and up < b_upper:
            b_upper = up
            witnesses = [f"{d} reduced to {trace.base} + {trace.cost}"]
    assert b_lower is not None

    b = b_upper
    c_hi = 3 * n - b
    c_floor = b + 1
    if b <= n + 1:
        # at b <= N+1 a realizing curve has at most N crossings, so its
        # diagram is islet-free and the Gauss sequence forces 2N-1 signs
        c_floor = max(c_floor, 2 * n - 1)
    candidates = [c for c in range(c_floor, c_hi + 1) if c % 3 != 0]
    c_lo = min(candidates) if candidates else c_hi
    status = "exact" if (b_lower == b_upper and len(candidates) <= 1) else "range"
    return DegreeReport(
        knot=k,
        b_lower=b_lower,
        b_upper=b_upper,
        c_lower=c_lo,
        c_upper=c_hi,
        status=status,
        deg_C=cheb,
        diagrams=diagrams,
        traces=traces,
        witnesses=witnesses,
    )
