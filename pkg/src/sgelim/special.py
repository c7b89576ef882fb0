"""Fast signed-eliminability checkers for restricted graph classes.

Each checker first decides whether its precondition holds (four vertices;
chordal underlying graph; independence number below three; complete
underlying graph) and reports ``applicable=False`` instead of raising when
it does not, so sweeps can push every graph through every checker.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .graph import (
    MINUS,
    PLUS,
    SIGNS,
    Sign,
    SignedGraph,
    _bits,
    flip_sign,
    sign_restriction,
    underlying_graph,
)
from .characterize import (
    SUBGRAPH_SEARCH_CAP,
    characterize,
    check_c2,
    chordality_check,
    find_hill,
    find_mountain,
    has_alternating_4path,
)
from .seo import _greedy_sequence


@dataclass(frozen=True)
class SpecialVerdict:
    """Outcome of one restricted checker.

    ``se`` is meaningful only when ``applicable``; ``reason`` names the
    clause that decided (or ``inapplicable``).
    """

    name: str
    applicable: bool
    se: bool
    reason: str


def format_special_verdict(v: SpecialVerdict) -> str:
    yn = {True: "y", False: "n"}
    return f"special {v.name}: applicable={yn[v.applicable]} se={yn[v.se]} reason={v.reason}"


def _inapplicable(name: str) -> SpecialVerdict:
    return SpecialVerdict(name, False, False, "inapplicable")


# ---------------------------------------------------------------------------
# Four-vertex graphs.


def _whole_graph_is_mountain(G: SignedGraph) -> bool:
    """Is the full 4-vertex graph a mountain (necessarily path length 3)?"""
    if G.n != 4:
        return False
    for sign in SIGNS:
        other = flip_sign(sign)
        for apex in range(4):
            for middle in range(4):
                if middle == apex:
                    continue
                ends = [v for v in range(4) if v not in (apex, middle)]
                required = {
                    frozenset((ends[0], middle)): other,
                    frozenset((middle, ends[1])): other,
                    frozenset((apex, middle)): sign,
                }
                if all(
                    G.edge_sign(a, b) == required.get(frozenset((a, b)))
                    for a, b in combinations(range(4), 2)
                ):
                    return True
    return False


def four_vertex_check(G: SignedGraph) -> SpecialVerdict:
    """Signed-eliminability of a 4-vertex graph.

    SE iff some vertex has degree three in one sign restriction (FV1), or
    both restrictions are chordal, the graph itself is not a mountain, and
    no alternating 4-path occurs (FV2).
    """
    name = "fv"
    if G.n != 4:
        return _inapplicable(name)
    if any(G.plus[v].bit_count() == 3 or G.minus[v].bit_count() == 3 for v in range(4)):
        return SpecialVerdict(name, True, True, "fv1")
    fv2 = (
        chordality_check(sign_restriction(G, PLUS)).chordal
        and chordality_check(sign_restriction(G, MINUS)).chordal
        and not _whole_graph_is_mountain(G)
        and not has_alternating_4path(G)
    )
    if fv2:
        return SpecialVerdict(name, True, True, "fv2")
    return SpecialVerdict(name, True, False, "neither")


# ---------------------------------------------------------------------------
# Chordal underlying graph.


def chordal_underlying_check(G: SignedGraph, cap: int = SUBGRAPH_SEARCH_CAP) -> SpecialVerdict:
    """When the underlying graph is chordal, SE reduces to C2 and C3."""
    name = "chordal"
    if not chordality_check(underlying_graph(G)).chordal:
        return _inapplicable(name)
    if check_c2(G) is not None:
        return SpecialVerdict(name, True, False, "c2")
    if find_mountain(G, cap=cap) is not None or find_hill(G, cap=cap) is not None:
        return SpecialVerdict(name, True, False, "c3")
    return SpecialVerdict(name, True, True, "c2+c3")


# ---------------------------------------------------------------------------
# Independence number below three.


def _has_independent_triple(G: SignedGraph) -> bool:
    union = [p | m for p, m in zip(G.plus, G.minus)]
    for i in range(G.n):
        non_i = ~union[i]
        for j in _bits(non_i & ((1 << G.n) - 1) >> (i + 1) << (i + 1)):
            third = non_i & ~union[j] & ((1 << G.n) - 1) >> (j + 1) << (j + 1)
            if third:
                return True
    return False


def _has_monochromatic_induced_cycle(G: SignedGraph, lengths: tuple[int, ...]) -> bool:
    """Cycle with all edges in one sign restriction and no chord of either
    sign among its vertices (i.e. an induced cycle of the whole graph)."""
    union = [p | m for p, m in zip(G.plus, G.minus)]
    for length in lengths:
        if length > G.n:
            continue
        for subset in combinations(range(G.n), length):
            first, rest = subset[0], subset[1:]
            for arrangement in permutations(rest):
                if arrangement[0] > arrangement[-1]:
                    continue  # each cycle once per direction
                cycle = (first, *arrangement)
                for sign in SIGNS:
                    adj = G.plus if sign == PLUS else G.minus
                    ok = True
                    for i, a in enumerate(cycle):
                        b = cycle[(i + 1) % length]
                        if not adj[a] >> b & 1:
                            ok = False
                            break
                    if not ok:
                        continue
                    chord = False
                    for i in range(length):
                        for j in range(i + 2, length):
                            if i == 0 and j == length - 1:
                                continue
                            if union[cycle[i]] >> cycle[j] & 1:
                                chord = True
                                break
                        if chord:
                            break
                    if not chord:
                        return True
    return False


def _matches_hill_assignment(
    G: SignedGraph, sign: Sign, path: tuple[int, ...], w1: int, w2: int
) -> bool:
    other = flip_sign(sign)
    required: dict[frozenset[int], Sign] = {frozenset((w1, w2)): sign}
    for a, b in zip(path, path[1:]):
        required[frozenset((a, b))] = other
    for m in path[:-1]:
        required[frozenset((w1, m))] = sign
    for m in path[1:]:
        required[frozenset((w2, m))] = sign
    vertices = (*path, w1, w2)
    for a, b in combinations(vertices, 2):
        if G.edge_sign(a, b) != required.get(frozenset((a, b))):
            return False
    return True


def _has_induced_hill_of_size(G: SignedGraph, total_vertices: tuple[int, ...]) -> bool:
    """Hill occurrence restricted to given total vertex counts.

    Subset-by-subset structural matching, independent of the general
    backtracking search (the two act as cross-checks of each other).
    """
    for size in total_vertices:
        if size > G.n:
            continue
        for subset in combinations(range(G.n), size):
            for w1, w2 in permutations(subset, 2):
                rest = tuple(v for v in subset if v not in (w1, w2))
                for path in permutations(rest):
                    if _matches_hill_assignment(G, PLUS, path, w1, w2):
                        return True
                    if _matches_hill_assignment(G, MINUS, path, w1, w2):
                        return True
    return False


def low_independence_check(G: SignedGraph) -> SpecialVerdict:
    """For graphs with no independent triple, SE reduces to C2 plus two
    small-forbidden-pattern conditions.

    I1: no 4- or 5-cycle of a single sign that is induced in the whole
    graph; I2: no hill on five or six vertices as an induced subgraph.
    """
    name = "lowindep"
    if _has_independent_triple(G):
        return _inapplicable(name)
    if check_c2(G) is not None:
        return SpecialVerdict(name, True, False, "c2")
    if _has_monochromatic_induced_cycle(G, (4, 5)):
        return SpecialVerdict(name, True, False, "i1")
    if _has_induced_hill_of_size(G, (5, 6)):
        return SpecialVerdict(name, True, False, "i2")
    return SpecialVerdict(name, True, True, "c2+i1+i2")


# ---------------------------------------------------------------------------
# Complete graphs.


def _has_induced_p4(adj: tuple[int, ...], n: int) -> bool:
    for b in range(n):
        for c in _bits(adj[b]):
            for a in _bits(adj[b] & ~adj[c] & ~(1 << c)):
                if adj[c] & ~adj[b] & ~adj[a] & ~(1 << a) & ~(1 << b):
                    return True
    return False


def _has_isolated_edge_pair(adj: tuple[int, ...], n: int) -> bool:
    edges = [(u, v) for u in range(n) for v in _bits(adj[u] >> (u + 1) << (u + 1))]
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1 :]:
            if len({a, b, c, d}) != 4:
                continue
            if not (adj[a] | adj[b]) & (1 << c | 1 << d):
                return True
    return False


def complete_graph_check(G: SignedGraph) -> SpecialVerdict:
    """For complete underlying graphs, SE fails exactly when one sign
    restriction contains an induced 4-vertex path or two disjoint edges
    with no same-sign edge between them."""
    name = "complete"
    full = (1 << G.n) - 1
    if any((G.plus[v] | G.minus[v]) != full & ~(1 << v) for v in range(G.n)):
        return _inapplicable(name)
    for sign in SIGNS:
        adj = G.plus if sign == PLUS else G.minus
        if _has_induced_p4(adj, G.n):
            return SpecialVerdict(name, True, False, f"p4{sign}")
        if _has_isolated_edge_pair(adj, G.n):
            return SpecialVerdict(name, True, False, f"2k2{sign}")
    return SpecialVerdict(name, True, True, "no-p4-2k2")


# ---------------------------------------------------------------------------
# Alternative characterization through 4-vertex subgraphs.


def remark_equivalence_check(G: SignedGraph, cap: int = SUBGRAPH_SEARCH_CAP) -> bool:
    """Compare two recognition routes on ``G``.

    Route one: both restrictions chordal, no mountain or hill, and every
    4-vertex induced subgraph signed-eliminable (by the greedy
    construction).  Route two: the full condition evaluation.  Returns
    whether the two verdicts agree.
    """
    verdict = characterize(G, cap=cap)
    route_one = (
        chordality_check(sign_restriction(G, PLUS)).chordal
        and chordality_check(sign_restriction(G, MINUS)).chordal
        and find_mountain(G, cap=cap) is None
        and find_hill(G, cap=cap) is None
    )
    if route_one:
        for subset in combinations(range(G.n), 4):
            mask = 0
            for v in subset:
                mask |= 1 << v
            if _greedy_sequence(G.plus, G.minus, mask) is None:
                route_one = False
                break
    return route_one == verdict.se
