"""Shared fixtures, hypothesis strategies, and independent test oracles.

The oracles here (chordality by cycle enumeration, mountain/hill occurrence
by subset matching, independence by triple scan) deliberately reimplement
their targets by brute force so library bugs cannot hide in shared code.
"""

from __future__ import annotations

from itertools import combinations, permutations

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from sgelim import MINUS, PLUS, SignedGraph, UnsignedGraph, build_graph, build_family

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


# ---------------------------------------------------------------------------
# Canonical fixtures.


@pytest.fixture
def g_ex() -> SignedGraph:
    """The worked 4-vertex example: 0 ~+ 1 ~+ 3 and 2 ~- 3."""
    return build_graph(4, [(0, 1, PLUS), (1, 3, PLUS), (2, 3, MINUS)])


@pytest.fixture
def m3() -> SignedGraph:
    return build_family("mountain", PLUS, 3)


@pytest.fixture
def cm3() -> SignedGraph:
    return build_family("capped_mountain", PLUS, 3)


@pytest.fixture
def hill2() -> SignedGraph:
    return build_family("hill", PLUS, 2)


@pytest.fixture
def ch2() -> SignedGraph:
    return build_family("capped_hill", PLUS, 2)


@pytest.fixture
def p4alt() -> SignedGraph:
    """Alternating 4-vertex path 0 ~+ 1 ~- 2 ~+ 3 with no other edges."""
    return build_graph(4, [(0, 1, PLUS), (1, 2, MINUS), (2, 3, PLUS)])


# ---------------------------------------------------------------------------
# Hypothesis strategies.


@st.composite
def signed_graphs(draw, min_n: int = 0, max_n: int = 5) -> SignedGraph:
    n = draw(st.integers(min_n, max_n))
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            state = draw(st.sampled_from((None, PLUS, MINUS)))
            if state is not None:
                edges.append((u, v, state))
    return build_graph(n, edges)


@st.composite
def graphs_with_orderings(draw, min_n: int = 1, max_n: int = 5):
    G = draw(signed_graphs(min_n=min_n, max_n=max_n))
    seq = draw(st.permutations(range(G.n)))
    return G, tuple(seq)


# ---------------------------------------------------------------------------
# Brute-force oracles.


def chordal_by_enumeration(H: UnsignedGraph) -> bool:
    """No vertex subset induces a cycle of length four or more."""
    for size in range(4, H.n + 1):
        for subset in combinations(range(H.n), size):
            inside = 0
            for v in subset:
                inside |= 1 << v
            degrees = [(H.adj[v] & inside).bit_count() for v in subset]
            if any(d != 2 for d in degrees):
                continue
            # all degrees two: a disjoint union of cycles; connected = one cycle
            seen = 1 << subset[0]
            frontier = seen
            while frontier:
                nxt = 0
                for v in subset:
                    if frontier >> v & 1:
                        nxt |= H.adj[v] & inside
                frontier = nxt & ~seen
                seen |= frontier
            if seen == inside:
                return False
    return True


def _matches_exactly(G: SignedGraph, vertices: tuple[int, ...], required: dict) -> bool:
    for a, b in combinations(vertices, 2):
        if G.edge_sign(a, b) != required.get(frozenset((a, b))):
            return False
    return True


def mountain_occurs(G: SignedGraph) -> bool:
    """Induced mountain occurrence by exhaustive subset/assignment matching."""
    for size in range(4, G.n + 1):
        for subset in combinations(range(G.n), size):
            for apex in subset:
                rest = tuple(v for v in subset if v != apex)
                for path in permutations(rest):
                    if path[0] > path[-1]:
                        continue
                    for sign in (PLUS, MINUS):
                        other = MINUS if sign == PLUS else PLUS
                        required = {frozenset(p): other for p in zip(path, path[1:])}
                        for m in path[1:-1]:
                            required[frozenset((apex, m))] = sign
                        if _matches_exactly(G, subset, required):
                            return True
    return False


def hill_occurs(G: SignedGraph, sizes: tuple[int, ...] | None = None) -> bool:
    """Induced hill occurrence by exhaustive subset/assignment matching."""
    candidate_sizes = sizes if sizes is not None else tuple(range(4, G.n + 1))
    for size in candidate_sizes:
        if size > G.n:
            continue
        for subset in combinations(range(G.n), size):
            for w1, w2 in permutations(subset, 2):
                rest = tuple(v for v in subset if v not in (w1, w2))
                for path in permutations(rest):
                    for sign in (PLUS, MINUS):
                        other = MINUS if sign == PLUS else PLUS
                        required = {frozenset((w1, w2)): sign}
                        for p in zip(path, path[1:]):
                            required[frozenset(p)] = other
                        for m in path[:-1]:
                            required[frozenset((w1, m))] = sign
                        for m in path[1:]:
                            required[frozenset((w2, m))] = sign
                        if _matches_exactly(G, subset, required):
                            return True
    return False


def independence_at_least_three(G: SignedGraph) -> bool:
    for trio in combinations(range(G.n), 3):
        if all(not G.has_edge(a, b) for a, b in combinations(trio, 2)):
            return True
    return False
