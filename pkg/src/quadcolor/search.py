"""Backtracking search over the acceptable-coloring space.

All searches walk sequences in diagonal order, extending one tile at a
time.  The tile at index k only constrains against its left and below
neighbors, whose indices are k-s-1 and k-s for s = x+y, so feasibility of
an extension is O(1) given the prefix.  Colors are always tried in
ascending numeric order, which makes every result deterministic:
enumerations come out lexicographic and first-found witnesses are
reproducible.

Searches optionally prune colors whose H- or V-successor set is empty
once the doomed neighbor tile falls inside the current target; this never
changes any result (tested against the unpruned oracle) but lets bounded
systems die fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .checker import check_sequence
from .systems import (
    Bounded,
    ColoringSystem,
    HasColoring,
    InputError,
    PeriodicWitness,
    Unknown,
    Verdict,
    require_valid,
)


class BudgetExhausted(Exception):
    """Raised when a search runs out of its node budget."""

    def __init__(self, nodes: int):
        super().__init__(f"search node budget exhausted after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class SearchBudget:
    """Caps on how far searches go.  node_cap=None means unbounded."""

    depth_cap: int = 64
    period_cap: int = 4
    node_cap: Optional[int] = None

    def __post_init__(self):
        if self.depth_cap < 1 or self.period_cap < 1:
            raise InputError(f"budget caps must be >= 1, got {self}")
        if self.node_cap is not None and self.node_cap < 1:
            raise InputError(f"node cap must be >= 1 or None, got {self.node_cap}")


@dataclass(frozen=True)
class ExactMax:
    """Some acceptable sequence of this length exists and none longer."""

    length: int


@dataclass(frozen=True)
class ReachedCap:
    """An acceptable sequence of length depth_cap exists; no upper claim."""

    depth: int


@dataclass(frozen=True)
class Indeterminate:
    """Node budget ran out before the search could conclude anything."""

    max_seen: int
    nodes: int


@dataclass(frozen=True)
class Unreachable:
    """No acceptable sequence of the requested horizon length exists."""

    horizon: int


@dataclass(frozen=True)
class Enumeration:
    sequences: tuple[tuple[int, ...], ...]
    truncated: bool


@dataclass(frozen=True)
class LengthProfile:
    """counts[L] = number of acceptable sequences of length L+1."""

    counts: tuple[int, ...]


class _Search:
    """One search session over a fixed system: precomputed successor masks,
    lazily grown tile geometry, and a node budget shared by all walks."""

    def __init__(self, sys: ColoringSystem, node_cap: Optional[int] = None, prune: bool = True):
        n = sys.n
        self.full = (1 << n) - 1
        self.origin_bit = 1 << sys.origin
        self.h_next = [sys.h_successors(c) for c in range(n)]
        self.v_next = [sys.v_successors(c) for c in range(n)]
        live_h = 0
        live_v = 0
        for c in range(n):
            if self.h_next[c]:
                live_h |= 1 << c
            if self.v_next[c]:
                live_v |= 1 << c
        self.live_h = live_h
        self.live_v = live_v
        self.prune = prune
        self.nodes_left = node_cap
        self.nodes_spent = 0
        self.xs = [0]  # xs[k], ss[k]: column and anti-diagonal of index k
        self.ss = [0]

    def _grow_geometry(self, upto: int) -> None:
        xs, ss = self.xs, self.ss
        while len(xs) < upto:
            x, s = xs[-1], ss[-1]
            if x == s:
                xs.append(0)
                ss.append(s + 1)
            else:
                xs.append(x + 1)
                ss.append(s)

    def _spend(self) -> None:
        if self.nodes_left is not None:
            if self.nodes_left == 0:
                raise BudgetExhausted(self.nodes_spent)
            self.nodes_left -= 1
        self.nodes_spent += 1

    def _cands(self, k: int, seq: list) -> int:
        """Colors legal at index k against the already-placed prefix."""
        if k == 0:
            return self.origin_bit
        x = self.xs[k]
        s = self.ss[k]
        m = self.full
        if x:
            m &= self.h_next[seq[k - s - 1]]
        if x < s:  # y = s - x > 0
            m &= self.v_next[seq[k - s]]
        return m

    def _cands_toward(self, k: int, seq: list, target: int) -> int:
        """Candidates at k, pruned of colors that cannot survive until the
        sequence reaches ``target`` elements."""
        m = self._cands(k, seq)
        if m and self.prune:
            s = self.ss[k]
            # right neighbor of tile k sits at index k+s+2, upper at k+s+1;
            # a dead color placed now dooms that index if it is < target.
            if k + s + 2 < target:
                m &= self.live_h
            if k + s + 1 < target:
                m &= self.live_v
        return m

    def first_sequence(self, target: int, prefix: Sequence[int]) -> Optional[tuple]:
        """Lexicographically least acceptable length-``target`` extension of
        the (already accepted) prefix, or None.  This is the hot loop of the
        whole package, so candidate masks are computed inline on locals."""
        k = len(prefix)
        if k >= target:
            return tuple(prefix)
        self._grow_geometry(target)
        seq = list(prefix)
        xs, ss = self.xs, self.ss
        h_next, v_next = self.h_next, self.v_next
        live_h, live_v = self.live_h, self.live_v
        prune = self.prune
        nodes_left = self.nodes_left
        nodes = 0
        stack = []
        cand = self._cands_toward(k, seq, target)
        try:
            while True:
                if cand:
                    low = cand & -cand
                    cand ^= low
                    if nodes_left is not None:
                        if nodes_left == 0:
                            raise BudgetExhausted(self.nodes_spent + nodes)
                        nodes_left -= 1
                    nodes += 1
                    seq.append(low.bit_length() - 1)
                    stack.append(cand)
                    k += 1
                    if k == target:
                        return tuple(seq)
                    x = xs[k]
                    s = ss[k]
                    if x:
                        cand = h_next[seq[k - s - 1]]
                        if x < s:
                            cand &= v_next[seq[k - s]]
                    else:
                        cand = v_next[seq[k - s]]
                    if cand and prune:
                        if k + s + 2 < target:
                            cand &= live_h
                        if k + s + 1 < target:
                            cand &= live_v
                else:
                    if not stack:
                        return None
                    cand = stack.pop()
                    seq.pop()
                    k -= 1
        finally:
            self.nodes_spent += nodes
            self.nodes_left = nodes_left

    def exists(self, target: int, prefix: Sequence[int]) -> bool:
        """True iff some acceptable sequence of length target extends the
        (already accepted) prefix."""
        return self.first_sequence(target, prefix) is not None

    def exhaust(self, cap: int) -> tuple[int, bool, bool]:
        """Explore the whole tree up to length cap.

        Returns (longest length seen, reached cap, fully exhausted).  Stops
        early the moment length cap is reached.  On budget exhaustion
        returns with fully_exhausted=False instead of raising.
        """
        self._grow_geometry(cap)
        seq: list = []
        stack: list = []
        k = 0
        best = 0
        try:
            cand = self._cands_best(0, seq, best)
            while True:
                if cand:
                    low = cand & -cand
                    cand ^= low
                    self._spend()
                    seq.append(low.bit_length() - 1)
                    stack.append(cand)
                    k += 1
                    if k > best:
                        best = k
                        if best == cap:
                            return best, True, True
                    cand = self._cands_best(k, seq, best)
                else:
                    if not stack:
                        return best, False, True
                    cand = stack.pop()
                    seq.pop()
                    k -= 1
        except BudgetExhausted:
            return best, False, False

    def _cands_best(self, k: int, seq: list, best: int) -> int:
        """Candidates at k for max-length search: prune colors whose doomed
        neighbor caps the branch at or below the best length already found."""
        m = self._cands(k, seq)
        if m and self.prune:
            s = self.ss[k]
            if k + s + 2 <= best:
                m &= self.live_h
            if k + s + 1 <= best:
                m &= self.live_v
        return m

    def sequences_of_length(self, length: int, limit: Optional[int]) -> tuple[list, bool]:
        """All acceptable sequences of exactly ``length``, lexicographic."""
        self._grow_geometry(length)
        out: list[tuple[int, ...]] = []
        seq: list = []
        stack: list = []
        k = 0
        cand = self._cands_toward(0, seq, length)
        while True:
            if cand:
                low = cand & -cand
                cand ^= low
                self._spend()
                c = low.bit_length() - 1
                if k + 1 == length:
                    if limit is not None and len(out) >= limit:
                        return out, True
                    out.append(tuple(seq) + (c,))
                    continue
                seq.append(c)
                stack.append(cand)
                k += 1
                cand = self._cands_toward(k, seq, length)
            else:
                if not stack:
                    return out, False
                cand = stack.pop()
                seq.pop()
                k -= 1

    def profile(self, cap: int) -> tuple[list, bool]:
        """counts[k] = number of acceptable sequences of length k+1, k < cap.
        Unpruned: pruning would drop short sequences from the counts.
        Returns (counts, complete); counts are partial when incomplete."""
        self._grow_geometry(cap)
        counts = [0] * cap
        seq: list = []
        stack: list = []
        k = 0
        try:
            cand = self._cands(0, seq)
            while True:
                if cand:
                    low = cand & -cand
                    cand ^= low
                    self._spend()
                    c = low.bit_length() - 1
                    counts[k] += 1
                    if k + 1 == cap:
                        continue
                    seq.append(c)
                    stack.append(cand)
                    k += 1
                    cand = self._cands(k, seq)
                else:
                    if not stack:
                        return counts, True
                    cand = stack.pop()
                    seq.pop()
                    k -= 1
        except BudgetExhausted:
            return counts, False


def max_accept_length(
    sys: ColoringSystem, budget: SearchBudget, prune: bool = True
) -> Union[ExactMax, ReachedCap, Indeterminate]:
    """Longest acceptable sequence length, up to the depth cap.

    ExactMax(L) is a proof: the search tree was fully exhausted, so no
    sequence of length L+1 exists.  ReachedCap only certifies existence at
    the cap.  Indeterminate reports an exhausted node budget.
    """
    require_valid(sys)
    search = _Search(sys, node_cap=budget.node_cap, prune=prune)
    best, reached_cap, complete = search.exhaust(budget.depth_cap)
    if reached_cap:
        return ReachedCap(budget.depth_cap)
    if complete:
        return ExactMax(best)
    return Indeterminate(max_seen=best, nodes=search.nodes_spent)


def enumerate_sequences(
    sys: ColoringSystem,
    length: int,
    limit: Optional[int] = None,
    node_cap: Optional[int] = None,
    prune: bool = True,
) -> Enumeration:
    """All acceptable sequences of exactly ``length``, in lexicographic
    color order, truncated at ``limit`` when given."""
    require_valid(sys)
    if length < 1:
        raise InputError(f"sequence length must be >= 1, got {length}")
    if limit is not None and limit < 0:
        raise InputError(f"limit must be >= 0 or None, got {limit}")
    search = _Search(sys, node_cap=node_cap, prune=prune)
    found, truncated = search.sequences_of_length(length, limit)
    return Enumeration(sequences=tuple(found), truncated=truncated)


def length_profile(
    sys: ColoringSystem, budget: SearchBudget
) -> Union[LengthProfile, Indeterminate]:
    """Exact per-length counts up to the depth cap, from one traversal."""
    require_valid(sys)
    search = _Search(sys, node_cap=budget.node_cap, prune=False)
    counts, complete = search.profile(budget.depth_cap)
    if not complete:
        longest = max((k + 1 for k, c in enumerate(counts) if c), default=0)
        return Indeterminate(max_seen=longest, nodes=search.nodes_spent)
    return LengthProfile(counts=tuple(counts))


def extendable_colors(
    sys: ColoringSystem,
    prefix: Sequence[int],
    horizon: int,
    node_cap: Optional[int] = None,
) -> frozenset:
    """Colors c such that prefix + (c,) is accepted and still extends to an
    acceptable sequence of length ``horizon``.

    The horizon is clamped to at least one extension step, so a horizon
    equal to len(prefix) asks which single extensions stay acceptable.
    An empty result proves the prefix cannot reach the horizon.
    """
    require_valid(sys)
    prefix = tuple(prefix)
    violation = check_sequence(sys, prefix)
    if violation is not None:
        raise InputError(f"prefix is not accepted: {violation.message()}")
    if horizon < len(prefix):
        raise InputError(f"horizon {horizon} shorter than the prefix ({len(prefix)})")
    target = max(horizon, len(prefix) + 1)
    search = _Search(sys, node_cap=node_cap)
    search._grow_geometry(len(prefix) + 1)
    out = set()
    cand = search._cands(len(prefix), list(prefix))
    while cand:
        low = cand & -cand
        cand ^= low
        c = low.bit_length() - 1
        if search.exists(target, prefix + (c,)):
            out.add(c)
    return frozenset(out)


def build_chain(
    sys: ColoringSystem,
    horizon: int,
    budget: Optional[SearchBudget] = None,
) -> Union[tuple, Unreachable, Indeterminate]:
    """Grow the chain (a) <= (a, c1) <= ... out to ``horizon`` elements by
    always taking the least color that still reaches the horizon.

    Taking the least viable color at every step yields exactly the
    lexicographically least acceptable sequence of the horizon length, so
    one first-leaf search computes the whole chain (the per-step variant
    re-proves viability of each prefix from scratch and is quadratically
    slower; the tests check the two agree).

    Returns Unreachable when no acceptable sequence of that length exists,
    Indeterminate when the node budget runs out first.
    """
    require_valid(sys)
    if horizon < 1:
        raise InputError(f"horizon must be >= 1, got {horizon}")
    node_cap = budget.node_cap if budget is not None else None
    search = _Search(sys, node_cap=node_cap)
    try:
        found = search.first_sequence(horizon, (sys.origin,))
    except BudgetExhausted:
        return Indeterminate(max_seen=0, nodes=search.nodes_spent)
    if found is None:
        return Unreachable(horizon)
    return found


def _wrap_rows(sys: ColoringSystem, p: int) -> list:
    """All length-p rows legal on a width-p cylinder: consecutive pairs in H
    and the wrap pair (row[-1], row[0]) in H.  Lexicographically sorted."""
    n = sys.n
    h_next = [sys.h_successors(c) for c in range(n)]
    rows = []
    for first in range(n):
        # grow rows left to right; ascending extension keeps the list sorted
        partial = [(first,)]
        for _ in range(p - 1):
            grown = []
            for row in partial:
                cand = h_next[row[-1]]
                while cand:
                    low = cand & -cand
                    cand ^= low
                    grown.append(row + (low.bit_length() - 1,))
            partial = grown
        for row in partial:
            if sys.h_allows(row[-1], row[0]):
                rows.append(row)
    return rows


def find_periodic_witness(
    sys: ColoringSystem, budget: SearchBudget
) -> Optional[PeriodicWitness]:
    """Search torus colorings over all periods up to the cap, smallest area
    first (ties by p, then q).  Cell (0, 0) is pinned to the origin color.
    Returns the first witness found, or None.

    Rows are the search unit: a p x q torus coloring is a closed walk of
    length q in the graph whose nodes are the horizontally-wrap-legal rows
    and whose edges are vertical compatibility.  Walking that graph with
    rows in ascending order visits complete colorings in the same order as
    a cell-by-cell search, so the first witness is the lexicographically
    least one, but failed branches die a whole row at a time.
    """
    require_valid(sys)
    n = sys.n
    v_next = [sys.v_successors(c) for c in range(n)]

    nodes_left = [budget.node_cap]

    def spend(amount: int):
        if nodes_left[0] is not None:
            if nodes_left[0] < amount:
                raise BudgetExhausted((budget.node_cap or 0) - nodes_left[0])
            nodes_left[0] -= amount

    row_cache: dict = {}
    periods = sorted(
        (p * q, p, q)
        for p in range(1, budget.period_cap + 1)
        for q in range(1, budget.period_cap + 1)
    )
    for _, p, q in periods:
        if p not in row_cache:
            row_cache[p] = _wrap_rows(sys, p)
        rows = row_cache[p]
        starts = [r for r in rows if r[0] == sys.origin]
        compat: dict = {}

        def successors(row: tuple) -> list:
            out = compat.get(row)
            if out is None:
                masks = [v_next[c] for c in row]
                out = [r for r in rows if all(m >> c & 1 for m, c in zip(masks, r))]
                compat[row] = out
            return out

        # DFS over closed walks start -> ... -> start of length q
        for start in starts:
            spend(p)
            walk = [start]
            iters = [iter(successors(start))]
            while iters:
                if len(walk) == q:
                    if walk[0] in successors(walk[-1]):
                        return PeriodicWitness(p=p, q=q, rows=tuple(walk))
                    walk.pop()
                    iters.pop()
                    continue
                step = next(iters[-1], None)
                if step is None:
                    walk.pop()
                    iters.pop()
                else:
                    spend(p)
                    walk.append(step)
                    iters.append(iter(successors(step)))
    return None


def classify(sys: ColoringSystem, budget: SearchBudget) -> Verdict:
    """Full verdict for one system.

    Witnesses are tried first (cheap at small period caps, and a witness
    settles the question).  A Bounded verdict requires full exhaustion of
    the sequence tree, which cannot coexist with any acceptable coloring,
    so an aborted witness search never makes Bounded unsound.
    """
    require_valid(sys)
    try:
        witness = find_periodic_witness(sys, budget)
    except BudgetExhausted:
        witness = None
    if witness is not None:
        return HasColoring(witness)
    result = max_accept_length(sys, budget)
    if isinstance(result, ExactMax):
        return Bounded(result.length)
    depth = result.depth if isinstance(result, ReachedCap) else result.max_seen
    return Unknown(depth_reached=depth, period_cap_reached=budget.period_cap)
