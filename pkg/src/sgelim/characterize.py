"""Full recognition of signed-eliminable graphs with checkable certificates.

A signed graph admits a SEO exactly when

  C1: both sign restrictions are chordal,
  C2: every alternating 4-path ``u ~s v ~(-s) w ~s x`` (three edges over
      distinct vertices; the remaining pairs are unconstrained) satisfies
      ``w ~s u ~s x`` or ``u ~s x ~s v`` (inclusive or), and
  C3: no mountain and no hill occurs as an induced subgraph.

Each failed condition is reported as an explicit certificate that
:func:`verify_certificate` re-checks against the graph from scratch.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import (
    MINUS,
    PLUS,
    SIGNS,
    Sign,
    SignedGraph,
    UnsignedGraph,
    _bits,
    flip_sign,
    neighborhood,
    serialize_sg,
    sign_restriction,
)
from .seo import Ordering, greedy_seo

SUBGRAPH_SEARCH_CAP = 12


@dataclass(frozen=True)
class ChordlessCycle:
    """Induced cycle (length >= 4) in one sign restriction.

    Consecutive pairs, cyclically, carry ``sign``; no other pair among the
    cycle vertices carries ``sign`` (edges of the opposite sign may exist).
    """

    sign: Sign
    cycle: tuple[int, ...]


@dataclass(frozen=True)
class AltPathViolation:
    """Alternating 4-path whose C2 conclusion fails both ways."""

    sign: Sign
    u: int
    v: int
    w: int
    x: int


@dataclass(frozen=True)
class Mountain:
    """Occurrence of a mountain as an induced subgraph.

    ``path`` is a (-sign)-path; ``apex`` is sign-adjacent to exactly the
    interior path vertices; no other pair of the listed vertices is joined.
    """

    sign: Sign
    path: tuple[int, ...]
    apex: int


@dataclass(frozen=True)
class Hill:
    """Occurrence of a hill as an induced subgraph.

    ``path`` is a (-sign)-path; the two apexes are sign-adjacent to each
    other, the first covers all but the last path vertex, the second all
    but the first; no other pair of the listed vertices is joined.
    """

    sign: Sign
    path: tuple[int, ...]
    apexes: tuple[int, int]


Certificate = ChordlessCycle | AltPathViolation | Mountain | Hill


def format_certificate(cert: Certificate) -> str:
    """One-line text form of a certificate (stable, machine-parseable)."""
    if isinstance(cert, ChordlessCycle):
        return f"cert chordless-cycle {cert.sign} " + " ".join(str(v) for v in cert.cycle)
    if isinstance(cert, AltPathViolation):
        return f"cert alt-path {cert.sign} {cert.u} {cert.v} {cert.w} {cert.x}"
    if isinstance(cert, Mountain):
        path = ",".join(str(v) for v in cert.path)
        return f"cert mountain {cert.sign} path={path} apex={cert.apex}"
    if isinstance(cert, Hill):
        path = ",".join(str(v) for v in cert.path)
        return f"cert hill {cert.sign} path={path} apexes={cert.apexes[0]},{cert.apexes[1]}"
    raise TypeError(f"not a certificate: {cert!r}")


@dataclass(frozen=True)
class ChordalityResult:
    """Outcome of :func:`chordality_check`: an elimination ordering or an
    induced cycle of length at least four."""

    chordal: bool
    ordering: Ordering | None
    cycle: tuple[int, ...] | None


@dataclass(frozen=True)
class Verdict:
    """Combined recognition outcome with all four condition flags.

    ``se`` is true iff all flags are true; then ``ordering`` holds a SEO.
    Otherwise ``certificate`` holds the first failure in evaluation order
    C1(+), C1(-), C2, C3 (mountains before hills).
    """

    se: bool
    ordering: Ordering | None
    certificate: Certificate | None
    c1_plus: bool
    c1_minus: bool
    c2: bool
    c3: bool


# ---------------------------------------------------------------------------
# Chordality via maximum-cardinality search.


def _mcs_order(adj: tuple[int, ...], n: int) -> list[int]:
    """Maximum-cardinality search order (ties towards the lowest index)."""
    weight = [0] * n
    order = []
    picked = 0
    for _ in range(n):
        best = -1
        best_w = -1
        for v in range(n):
            if not picked >> v & 1 and weight[v] > best_w:
                best = v
                best_w = weight[v]
        order.append(best)
        picked |= 1 << best
        for u in _bits(adj[best] & ~picked):
            weight[u] += 1
    return order


def _lowest_id_bfs_path(adj: tuple[int, ...], allowed: int, start: int, goal: int) -> list[int] | None:
    """Shortest start-goal path inside ``allowed``, deterministic by
    exploring neighbours in increasing index order."""
    parent = {start: -1}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if v == goal:
            path = [v]
            while parent[path[-1]] != -1:
                path.append(parent[path[-1]])
            path.reverse()
            return path
        for u in _bits(adj[v] & allowed):
            if u not in parent:
                parent[u] = v
                queue.append(u)
    return None


def _canonical_cycle(cycle: list[int]) -> tuple[int, ...]:
    """Rotate/reflect so the smallest vertex leads towards its smaller
    cycle-neighbour."""
    k = len(cycle)
    i = cycle.index(min(cycle))
    forward = [cycle[(i + t) % k] for t in range(k)]
    backward = [cycle[(i - t) % k] for t in range(k)]
    return tuple(forward if forward[1] < backward[1] else backward)


def _extract_cycle(adj: tuple[int, ...], v: int, a: int, b: int) -> tuple[int, ...] | None:
    """Close an induced cycle through ``v`` from non-adjacent neighbours
    ``a, b``: a shortest a-b path avoiding N[v] except at its endpoints."""
    allowed = ~(adj[v] | 1 << v) | 1 << a | 1 << b
    path = _lowest_id_bfs_path(adj, allowed, a, b)
    if path is None:
        return None
    return _canonical_cycle([v] + path)


def chordality_check(H: UnsignedGraph) -> ChordalityResult:
    """Decide chordality with a witness either way.

    Runs maximum-cardinality search and verifies the resulting order
    (earlier neighbours of every vertex must form a clique); the
    verification pass is what certifies a chordal answer.  On failure the
    failing vertex and its first non-adjacent earlier pair open an induced
    cycle of length >= 4, recovered by lowest-id BFS; if that pair happens
    to be separated once N[v] is removed, a deterministic full scan over
    all such triples finds a pair that is not.
    """
    n, adj = H.n, H.adj
    order = _mcs_order(adj, n)
    earlier = 0
    failing: tuple[int, int, int] | None = None
    for w in order:
        back = adj[w] & earlier
        members = list(_bits(back))
        for ai, a in enumerate(members):
            missing = back & ~adj[a] & ~(1 << a)
            if missing:
                b = next(x for x in members[ai + 1 :] if missing >> x & 1)
                failing = (w, a, b)
                break
        if failing:
            break
        earlier |= 1 << w
    if failing is None:
        return ChordalityResult(True, Ordering(tuple(order)), None)
    cycle = _extract_cycle(adj, *failing)
    if cycle is None:
        # The graph is certifiably non-chordal, so some vertex has two
        # non-adjacent neighbours connected away from it; scan for one.
        for v in range(n):
            nb = list(_bits(adj[v]))
            for i, a in enumerate(nb):
                for b in nb[i + 1 :]:
                    if not adj[a] >> b & 1:
                        cycle = _extract_cycle(adj, v, a, b)
                        if cycle is not None:
                            break
                if cycle is not None:
                    break
            if cycle is not None:
                break
    if cycle is None:
        raise AssertionError("ordering check failed but no induced cycle found")
    return ChordalityResult(False, None, cycle)


def check_c1(G: SignedGraph) -> ChordlessCycle | None:
    """Chordality of both sign restrictions; first failure wins."""
    for sign in SIGNS:
        result = chordality_check(sign_restriction(G, sign))
        if not result.chordal:
            return ChordlessCycle(sign, result.cycle)
    return None


# ---------------------------------------------------------------------------
# Alternating 4-paths.


def _alt_path_scan(G: SignedGraph, stop_at_pattern: bool) -> AltPathViolation | None:
    """Scan quadruples lexicographically by (sign, u, v, w, x).

    With ``stop_at_pattern`` the first alternating 4-path is reported as a
    pseudo-violation regardless of the conclusion; otherwise only genuine
    C2 violations are reported.
    """
    n = G.n
    for sign in SIGNS:
        adj = G.plus if sign == PLUS else G.minus
        coadj = G.minus if sign == PLUS else G.plus
        for u in range(n):
            for v in _bits(adj[u]):
                for w in _bits(coadj[v] & ~(1 << u)):
                    for x in _bits(adj[w] & ~(1 << u) & ~(1 << v)):
                        if stop_at_pattern:
                            return AltPathViolation(sign, u, v, w, x)
                        au = adj[u]
                        if au >> x & 1 and (au >> w & 1 or adj[x] >> v & 1):
                            continue
                        return AltPathViolation(sign, u, v, w, x)
    return None


def check_c2(G: SignedGraph) -> AltPathViolation | None:
    """First alternating 4-path violating C2, or ``None``."""
    return _alt_path_scan(G, stop_at_pattern=False)


def has_alternating_4path(G: SignedGraph) -> bool:
    """Does any alternating 4-path occur at all (conclusion ignored)?"""
    return _alt_path_scan(G, stop_at_pattern=True) is not None


# ---------------------------------------------------------------------------
# Mountain / hill search.  Exponential-time backtracking, deterministic by
# lowest-id-first exploration; fine at the intended graph sizes.


def _check_cap(G: SignedGraph, cap: int) -> None:
    if G.n > cap:
        raise ValueError(f"n={G.n} above subgraph search cap {cap}; pass cap= to override")


def find_mountain(G: SignedGraph, cap: int = SUBGRAPH_SEARCH_CAP) -> Mountain | None:
    """First mountain occurring in ``G`` as an induced subgraph.

    For each sign and apex, grows induced opposite-sign paths through the
    apex's sign-neighbourhood, then tries to attach the two free endpoints
    (adjacent only to their path neighbour and not to the apex).
    """
    _check_cap(G, cap)
    union = tuple(p | m for p, m in zip(G.plus, G.minus))
    for sign in SIGNS:
        apex_adj = G.plus if sign == PLUS else G.minus
        path_adj = G.minus if sign == PLUS else G.plus
        for w in range(G.n):
            mids = apex_adj[w]
            if not mids:
                continue

            def close(path: list[int], path_mask: int) -> Mountain | None:
                first, last = path[0], path[-1]
                for v1 in _bits(path_adj[first] & ~union[w] & ~path_mask):
                    if union[v1] & (path_mask ^ (1 << first)):
                        continue
                    ends = path_adj[last] & ~union[w] & ~path_mask & ~(1 << v1) & ~union[v1]
                    for vn in _bits(ends):
                        if union[vn] & (path_mask ^ (1 << last)):
                            continue
                        return Mountain(sign, (v1, *path, vn), w)
                return None

            def grow(path: list[int], path_mask: int) -> Mountain | None:
                found = close(path, path_mask)
                if found is not None:
                    return found
                last = path[-1]
                for m in _bits(mids & path_adj[last] & ~path_mask):
                    if union[m] & (path_mask ^ (1 << last)):
                        continue
                    path.append(m)
                    found = grow(path, path_mask | 1 << m)
                    path.pop()
                    if found is not None:
                        return found
                return None

            for m1 in _bits(mids):
                found = grow([m1], 1 << m1)
                if found is not None:
                    return found
    return None


def find_hill(G: SignedGraph, cap: int = SUBGRAPH_SEARCH_CAP) -> Hill | None:
    """First hill occurring in ``G`` as an induced subgraph.

    For each sign and ordered sign-adjacent apex pair ``(w1, w2)``, grows
    the opposite-sign path left to right: the first vertex sees ``w1``
    only, interior vertices see both apexes, the final vertex sees ``w2``
    only.
    """
    _check_cap(G, cap)
    union = tuple(p | m for p, m in zip(G.plus, G.minus))
    for sign in SIGNS:
        apex_adj = G.plus if sign == PLUS else G.minus
        path_adj = G.minus if sign == PLUS else G.plus
        for w1 in range(G.n):
            for w2 in _bits(apex_adj[w1]):
                both = apex_adj[w1] & apex_adj[w2]

                def close(path: list[int], path_mask: int) -> Hill | None:
                    last = path[-1]
                    ends = path_adj[last] & apex_adj[w2] & ~union[w1] & ~(1 << w1) & ~path_mask
                    for vn in _bits(ends):
                        if union[vn] & (path_mask ^ (1 << last)):
                            continue
                        return Hill(sign, (*path, vn), (w1, w2))
                    return None

                def grow(path: list[int], path_mask: int) -> Hill | None:
                    found = close(path, path_mask)
                    if found is not None:
                        return found
                    last = path[-1]
                    for m in _bits(both & path_adj[last] & ~path_mask):
                        if union[m] & (path_mask ^ (1 << last)):
                            continue
                        path.append(m)
                        found = grow(path, path_mask | 1 << m)
                        path.pop()
                        if found is not None:
                            return found
                    return None

                starts = apex_adj[w1] & ~union[w2] & ~(1 << w2)
                for v1 in _bits(starts):
                    found = grow([v1], 1 << v1)
                    if found is not None:
                        return found
    return None


# ---------------------------------------------------------------------------
# Combined verdict and independent certificate verification.


def characterize(G: SignedGraph, cap: int = SUBGRAPH_SEARCH_CAP) -> Verdict:
    """Evaluate C1, C2, C3 and produce a SEO or the first certificate.

    All four condition flags are always populated (the hill search is
    skipped when a mountain already settles C3).  When every condition
    holds, the greedy construction must succeed; a failure to do so would
    falsify the recognition theorem and raises immediately.
    """
    plus_result = chordality_check(sign_restriction(G, PLUS))
    minus_result = chordality_check(sign_restriction(G, MINUS))
    c2_violation = check_c2(G)
    mountain = find_mountain(G, cap=cap)
    hill = find_hill(G, cap=cap) if mountain is None else None
    c1_plus = plus_result.chordal
    c1_minus = minus_result.chordal
    c2 = c2_violation is None
    c3 = mountain is None and hill is None

    certificate: Certificate | None = None
    if not c1_plus:
        certificate = ChordlessCycle(PLUS, plus_result.cycle)
    elif not c1_minus:
        certificate = ChordlessCycle(MINUS, minus_result.cycle)
    elif not c2:
        certificate = c2_violation
    elif mountain is not None:
        certificate = mountain
    elif hill is not None:
        certificate = hill

    if certificate is None:
        ordering = greedy_seo(G)
        if ordering is None:
            raise RuntimeError(
                "conditions C1-C3 hold but greedy construction failed on:\n" + serialize_sg(G)
            )
        return Verdict(True, ordering, None, c1_plus, c1_minus, c2, c3)
    return Verdict(False, None, certificate, c1_plus, c1_minus, c2, c3)


def _verify_exact_edges(
    G: SignedGraph,
    vertices: list[int],
    required: dict[frozenset[int], Sign],
) -> str | None:
    """All ``required`` edges present with their signs, nothing else among
    ``vertices``."""
    for i, a in enumerate(vertices):
        for b in vertices[i + 1 :]:
            want = required.get(frozenset((a, b)))
            got = G.edge_sign(a, b)
            if want is None and got is not None:
                return f"unexpected edge ({a}, {b})"
            if want is not None and got != want:
                return f"edge ({a}, {b}) should have sign {want}, found {got}"
    return None


def verify_certificate(G: SignedGraph, cert: Certificate) -> str | None:
    """Re-check a certificate against ``G`` from its definition alone.

    Returns ``None`` when the certificate is valid, else a reason string.
    Shares no code with the searches that produced the certificate; only
    neighbourhood/edge queries are used.
    """
    try:
        if isinstance(cert, ChordlessCycle):
            cycle = cert.cycle
            if len(cycle) < 4:
                return "cycle must have at least four vertices"
            if len(set(cycle)) != len(cycle):
                return "cycle vertices are not distinct"
            k = len(cycle)
            for i, a in enumerate(cycle):
                b = cycle[(i + 1) % k]
                if b not in neighborhood(G, a, cert.sign):
                    return f"missing cycle edge ({a}, {b}) of sign {cert.sign}"
            for i, a in enumerate(cycle):
                for j in range(i + 2, k):
                    if i == 0 and j == k - 1:
                        continue
                    b = cycle[j]
                    if b in neighborhood(G, a, cert.sign):
                        return f"chord ({a}, {b}) of sign {cert.sign}"
            return None

        if isinstance(cert, AltPathViolation):
            u, v, w, x = cert.u, cert.v, cert.w, cert.x
            if len({u, v, w, x}) != 4:
                return "vertices are not distinct"
            sign, other = cert.sign, flip_sign(cert.sign)
            if v not in neighborhood(G, u, sign):
                return f"missing edge ({u}, {v}) of sign {sign}"
            if w not in neighborhood(G, v, other):
                return f"missing edge ({v}, {w}) of sign {other}"
            if x not in neighborhood(G, w, sign):
                return f"missing edge ({w}, {x}) of sign {sign}"
            nu = neighborhood(G, u, sign)
            if x in nu and w in nu:
                return "conclusion holds: u covers w and x"
            if x in nu and v in neighborhood(G, x, sign):
                return "conclusion holds: x covers u and v"
            return None

        if isinstance(cert, Mountain):
            path = list(cert.path)
            if len(path) < 3:
                return "mountain path must have at least three vertices"
            vertices = path + [cert.apex]
            if len(set(vertices)) != len(vertices):
                return "vertices are not distinct"
            other = flip_sign(cert.sign)
            required: dict[frozenset[int], Sign] = {}
            for a, b in zip(path, path[1:]):
                required[frozenset((a, b))] = other
            for m in path[1:-1]:
                required[frozenset((cert.apex, m))] = cert.sign
            return _verify_exact_edges(G, vertices, required)

        if isinstance(cert, Hill):
            path = list(cert.path)
            w1, w2 = cert.apexes
            if len(path) < 2:
                return "hill path must have at least two vertices"
            vertices = path + [w1, w2]
            if len(set(vertices)) != len(vertices):
                return "vertices are not distinct"
            other = flip_sign(cert.sign)
            required = {frozenset((w1, w2)): cert.sign}
            for a, b in zip(path, path[1:]):
                required[frozenset((a, b))] = other
            for m in path[:-1]:
                required[frozenset((w1, m))] = cert.sign
            for m in path[1:]:
                required[frozenset((w2, m))] = cert.sign
            return _verify_exact_edges(G, vertices, required)
    except ValueError as exc:
        return str(exc)
    return f"unknown certificate type: {type(cert).__name__}"
