"""Shared fixtures, strategies, and brute-force oracles.

The oracles here deliberately avoid the search engine and the incremental
checker: acceptance is re-derived from the pair relations over the tile
grid, so a bug in the product code cannot hide behind itself.
"""

from itertools import product

import pytest
from hypothesis import strategies as st

import quadcolor as qc
from quadcolor import fixtures as fx


@pytest.fixture(scope="session")
def example_system():
    return fx.example_system()


@pytest.fixture(scope="session")
def example_triangle():
    return fx.example_triangle()


@pytest.fixture(scope="session")
def example_sequence():
    return fx.example_sequence()


# -- oracles ------------------------------------------------------------------


def brute_accepted(sys, seq) -> bool:
    """Acceptance straight from the definitions: lay the sequence out on the
    grid and test every horizontally and vertically adjacent pair."""
    seq = tuple(seq)
    if not seq or seq[0] != sys.origin:
        return False
    if any(not 0 <= c < sys.n for c in seq):
        return False
    cells = {qc.tile_at(k): c for k, c in enumerate(seq)}
    for (x, y), c in cells.items():
        right = cells.get((x + 1, y))
        if right is not None and not sys.h_allows(c, right):
            return False
        above = cells.get((x, y + 1))
        if above is not None and not sys.v_allows(c, above):
            return False
    return True


def brute_sequences(sys, length):
    """All accepted sequences of exactly ``length`` by filtering the full
    n^length product."""
    return [seq for seq in product(range(sys.n), repeat=length) if brute_accepted(sys, seq)]


def brute_levels(sys, cap):
    """levels[L-1] = all accepted sequences of length L, L <= cap, grown by
    one-color extension and re-checked from scratch each time."""
    levels = []
    level = [seq for seq in product(range(sys.n), repeat=1) if brute_accepted(sys, seq)]
    for _ in range(cap):
        levels.append(level)
        level = [
            seq + (c,)
            for seq in level
            for c in range(sys.n)
            if brute_accepted(sys, seq + (c,))
        ]
        if not level:
            break
    while len(levels) < cap:
        levels.append([])
    return levels


def brute_max_length(sys, cap):
    """Longest accepted length up to cap, or 0; None-safe independent oracle."""
    longest = 0
    for length, level in enumerate(brute_levels(sys, cap), start=1):
        if level:
            longest = length
    return longest


def brute_torus_colorings(sys, p, q):
    """All p x q torus colorings with cell (0,0) = origin that wrap-satisfy
    both relations, as row tuples."""
    out = []
    for flat in product(range(sys.n), repeat=p * q):
        if flat[0] != sys.origin:
            continue
        rows = tuple(tuple(flat[y * p : (y + 1) * p]) for y in range(q))
        ok = True
        for y in range(q):
            for x in range(p):
                c = rows[y][x]
                if not sys.h_allows(c, rows[y][(x + 1) % p]):
                    ok = False
                    break
                if not sys.v_allows(c, rows[(y + 1) % q][x]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(rows)
    return out


def random_system(rng, n) -> qc.ColoringSystem:
    return qc.ColoringSystem(
        n=n,
        origin=rng.randrange(n),
        h_mask=rng.getrandbits(n * n),
        v_mask=rng.getrandbits(n * n),
    )


def random_accepted_sequence(rng, sys, max_len):
    """Random walk through the candidate masks; stops at a dead end."""
    seq = [sys.origin]
    while len(seq) < max_len:
        k = len(seq)
        x, y = qc.tile_at(k)
        cands = (1 << sys.n) - 1
        if x > 0:
            cands &= sys.h_successors(seq[qc.tile_index(x - 1, y)])
        if y > 0:
            cands &= sys.v_successors(seq[qc.tile_index(x, y - 1)])
        if not cands:
            break
        choices = [c for c in range(sys.n) if cands >> c & 1]
        seq.append(rng.choice(choices))
    return tuple(seq)


# -- hypothesis strategies ------------------------------------------------------


def system_strategy(max_colors=4):
    def build(n):
        bits = n * n
        return st.builds(
            qc.ColoringSystem,
            n=st.just(n),
            origin=st.integers(0, n - 1),
            h_mask=st.integers(0, (1 << bits) - 1),
            v_mask=st.integers(0, (1 << bits) - 1),
        )

    return st.integers(1, max_colors).flatmap(build)


def tile_strategy(max_sum=2000):
    return st.tuples(st.integers(0, max_sum), st.integers(0, max_sum))
