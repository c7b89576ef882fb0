"""Signed-graph data model and the ``.sg`` text format.

A signed graph is a finite simple undirected graph whose edge set is
partitioned into positive and negative edges.  Vertices are the dense
indices ``0 .. n-1``.  Adjacency is stored as one integer bitmask per
vertex and per sign, which keeps the exhaustive small-graph sweeps cheap.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import Literal

Sign = Literal["+", "-"]

PLUS: Sign = "+"
MINUS: Sign = "-"
SIGNS: tuple[Sign, Sign] = (PLUS, MINUS)

ENUMERATION_CAP = 6


def flip_sign(sign: Sign) -> Sign:
    """Return the opposite sign (an involution on {+, -})."""
    if sign == PLUS:
        return MINUS
    if sign == MINUS:
        return PLUS
    raise ValueError(f"not a sign: {sign!r}")


def _bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class SignedGraph:
    """Immutable signed graph on vertices ``0 .. n-1``.

    ``plus[v]`` / ``minus[v]`` are bitmasks of the positive / negative
    neighbours of ``v``.  A pair carries at most one sign and never both.
    """

    n: int
    plus: tuple[int, ...]
    minus: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.plus) != self.n or len(self.minus) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v in range(self.n):
            p, m = self.plus[v], self.minus[v]
            if (p | m) & ~full:
                raise ValueError(f"adjacency of {v} mentions out-of-range vertices")
            if (p | m) >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if p & m:
                raise ValueError(f"vertex {v} has a pair with both signs")
        for v in range(self.n):
            for u in _bits(self.plus[v]):
                if not self.plus[u] >> v & 1:
                    raise ValueError("positive adjacency is not symmetric")
            for u in _bits(self.minus[v]):
                if not self.minus[u] >> v & 1:
                    raise ValueError("negative adjacency is not symmetric")

    def adj(self, v: int, sign: Sign) -> int:
        """Bitmask of the ``sign``-neighbours of ``v``."""
        return self.plus[v] if sign == PLUS else self.minus[v]

    def edge_sign(self, u: int, v: int) -> Sign | None:
        """Sign of the edge ``uv``, or ``None`` if absent.  Order-insensitive."""
        if not 0 <= u < self.n or not 0 <= v < self.n:
            raise ValueError(f"vertex out of range: {(u, v)}")
        if self.plus[u] >> v & 1:
            return PLUS
        if self.minus[u] >> v & 1:
            return MINUS
        return None

    def has_edge(self, u: int, v: int) -> bool:
        return ((self.plus[u] | self.minus[u]) >> v & 1) == 1

    def edges(self) -> list[tuple[int, int, Sign]]:
        """All edges as ``(u, v, sign)`` with ``u < v``, sorted."""
        out: list[tuple[int, int, Sign]] = []
        for u in range(self.n):
            for v in _bits((self.plus[u] | self.minus[u]) >> (u + 1) << (u + 1)):
                out.append((u, v, PLUS if self.plus[u] >> v & 1 else MINUS))
        return out

    def edge_counts(self) -> tuple[int, int]:
        """Number of positive and negative edges."""
        p = sum(m.bit_count() for m in self.plus) // 2
        m = sum(m.bit_count() for m in self.minus) // 2
        return p, m


@dataclass(frozen=True)
class UnsignedGraph:
    """Plain simple graph, same bitmask layout as :class:`SignedGraph`."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v in range(self.n):
            if self.adj[v] & ~full:
                raise ValueError(f"adjacency of {v} mentions out-of-range vertices")
            if self.adj[v] >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in _bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError("adjacency is not symmetric")

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v & 1) == 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]


def build_graph(n: int, edges: Iterable[tuple[int, int, Sign]]) -> SignedGraph:
    """Build a signed graph from an edge list.

    Rejects self-loops, out-of-range indices, and duplicate pairs (a pair
    listed twice is an error even if both occurrences agree on the sign;
    silently keeping one would hide sign conflicts).
    """
    plus = [0] * n
    minus = [0] * n
    seen = [0] * n
    for u, v, sign in edges:
        if not 0 <= u < n or not 0 <= v < n:
            raise ValueError(f"vertex out of range in edge ({u}, {v})")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if seen[u] >> v & 1:
            a, b = min(u, v), max(u, v)
            raise ValueError(f"duplicate edge ({a}, {b})")
        seen[u] |= 1 << v
        seen[v] |= 1 << u
        if sign == PLUS:
            plus[u] |= 1 << v
            plus[v] |= 1 << u
        elif sign == MINUS:
            minus[u] |= 1 << v
            minus[v] |= 1 << u
        else:
            raise ValueError(f"not a sign: {sign!r}")
    return SignedGraph(n, tuple(plus), tuple(minus))


def neighborhood(G: SignedGraph, v: int, sign: Sign, closed: bool = False) -> set[int]:
    """Open ``sign``-neighbourhood of ``v``; add ``v`` itself when ``closed``."""
    if not 0 <= v < G.n:
        raise ValueError(f"vertex out of range: {v}")
    out = set(_bits(G.adj(v, sign)))
    if closed:
        out.add(v)
    return out


def induced_subgraph(G: SignedGraph, keep: Iterable[int]) -> tuple[SignedGraph, dict[int, int]]:
    """Induced subgraph on ``keep`` plus the order-preserving relabelling.

    Returns ``(H, old_to_new)`` where the kept vertices are renumbered by
    increasing original index.
    """
    kept = sorted(set(keep))
    if kept and not (0 <= kept[0] and kept[-1] < G.n):
        raise ValueError("keep contains out-of-range vertices")
    old_to_new = {v: i for i, v in enumerate(kept)}
    mask = 0
    for v in kept:
        mask |= 1 << v
    plus = []
    minus = []
    for v in kept:
        p = 0
        m = 0
        for u in _bits(G.plus[v] & mask):
            p |= 1 << old_to_new[u]
        for u in _bits(G.minus[v] & mask):
            m |= 1 << old_to_new[u]
        plus.append(p)
        minus.append(m)
    return SignedGraph(len(kept), tuple(plus), tuple(minus)), old_to_new


def sign_restriction(G: SignedGraph, sign: Sign) -> UnsignedGraph:
    """Unsigned graph keeping exactly the edges of one sign."""
    return UnsignedGraph(G.n, G.plus if sign == PLUS else G.minus)


def underlying_graph(G: SignedGraph) -> UnsignedGraph:
    """Unsigned graph keeping every edge, signs dropped."""
    return UnsignedGraph(G.n, tuple(p | m for p, m in zip(G.plus, G.minus)))


def flip_signs(G: SignedGraph) -> SignedGraph:
    """Swap the sign of every edge."""
    return SignedGraph(G.n, G.minus, G.plus)


def connected_components(G: SignedGraph) -> list[tuple[int, ...]]:
    """Partition of the vertex set into components (edges of either sign).

    Components are listed by smallest member, each sorted increasingly.
    """
    unseen = (1 << G.n) - 1
    union = [p | m for p, m in zip(G.plus, G.minus)]
    out: list[tuple[int, ...]] = []
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= union[v]
            frontier = nxt & ~comp
            comp |= frontier
        out.append(tuple(_bits(comp)))
        unseen &= ~comp
    return out


def signed_graph_count(n: int) -> int:
    """Number of labelled signed graphs on ``n`` vertices: 3^(n(n-1)/2)."""
    return 3 ** (n * (n - 1) // 2)


def _vertex_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def signed_graph_from_index(n: int, index: int) -> SignedGraph:
    """Decode the ``index``-th labelled signed graph on ``n`` vertices.

    Pairs are ordered lexicographically ((0,1), (0,2), ..., (n-2,n-1)) and
    form the digits of ``index`` in base 3, last pair varying fastest;
    digit values are 0 = absent, 1 = plus, 2 = minus.
    """
    total = signed_graph_count(n)
    if not 0 <= index < total:
        raise ValueError(f"index out of range: {index}")
    pairs = _vertex_pairs(n)
    plus = [0] * n
    minus = [0] * n
    for u, v in reversed(pairs):
        index, digit = divmod(index, 3)
        if digit == 1:
            plus[u] |= 1 << v
            plus[v] |= 1 << u
        elif digit == 2:
            minus[u] |= 1 << v
            minus[v] |= 1 << u
    return SignedGraph(n, tuple(plus), tuple(minus))


def enumerate_signed_graphs(n: int, cap: int = ENUMERATION_CAP) -> Iterator[SignedGraph]:
    """Yield every labelled signed graph on ``n`` vertices exactly once.

    Odometer order as documented in :func:`signed_graph_from_index`; the
    edgeless graph comes first.  ``n`` above ``cap`` is refused since the
    count grows as 3^(n(n-1)/2); pass a larger ``cap`` to override.
    """
    if n > cap:
        raise ValueError(f"n={n} above enumeration cap {cap}")
    for index in range(signed_graph_count(n)):
        yield signed_graph_from_index(n, index)


class SgParseError(ValueError):
    """Malformed ``.sg`` input; ``lineno`` is 1-based."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_sg(text: str) -> SignedGraph:
    """Parse the ``.sg`` text format.

    Format: ``#`` starts a comment to end of line; the first non-comment,
    non-blank line is ``sgraph <n>``; every following such line is
    ``e <u> <v> <+|->`` with 0-based decimal indices.  Whitespace runs and
    CRLF line ends are tolerated.
    """
    n: int | None = None
    edges: list[tuple[int, int, Sign]] = []
    edge_lines: list[int] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if tokens[0] != "sgraph":
                raise SgParseError(lineno, f"expected 'sgraph <n>' header, got {tokens[0]!r}")
            if len(tokens) != 2:
                raise SgParseError(lineno, "header must be exactly 'sgraph <n>'")
            try:
                n = int(tokens[1])
            except ValueError:
                raise SgParseError(lineno, f"vertex count is not an integer: {tokens[1]!r}") from None
            if n < 0:
                raise SgParseError(lineno, "vertex count must be nonnegative")
            continue
        if tokens[0] == "sgraph":
            raise SgParseError(lineno, "duplicate 'sgraph' header")
        if tokens[0] != "e":
            raise SgParseError(lineno, f"unknown line type {tokens[0]!r}")
        if len(tokens) != 4:
            raise SgParseError(lineno, "edge line must be 'e <u> <v> <+|->'")
        try:
            u, v = int(tokens[1]), int(tokens[2])
        except ValueError:
            raise SgParseError(lineno, "edge endpoints must be integers") from None
        if tokens[3] not in (PLUS, MINUS):
            raise SgParseError(lineno, f"edge sign must be '+' or '-', got {tokens[3]!r}")
        edges.append((u, v, tokens[3]))
        edge_lines.append(lineno)
    if n is None:
        raise SgParseError(len(text.split("\n")), "missing 'sgraph <n>' header")
    plus = [0] * n
    minus = [0] * n
    seen = [0] * n
    for (u, v, sign), lineno in zip(edges, edge_lines):
        if not 0 <= u < n or not 0 <= v < n:
            raise SgParseError(lineno, f"vertex out of range in edge ({u}, {v})")
        if u == v:
            raise SgParseError(lineno, f"self-loop at vertex {u}")
        if seen[u] >> v & 1:
            raise SgParseError(lineno, f"duplicate edge ({min(u, v)}, {max(u, v)})")
        seen[u] |= 1 << v
        seen[v] |= 1 << u
        target = plus if sign == PLUS else minus
        target[u] |= 1 << v
        target[v] |= 1 << u
    return SignedGraph(n, tuple(plus), tuple(minus))


def serialize_sg(G: SignedGraph) -> str:
    """Canonical ``.sg`` form: header, then edges sorted with ``u < v``."""
    lines = [f"sgraph {G.n}"]
    for u, v, sign in G.edges():
        lines.append(f"e {u} {v} {sign}")
    return "\n".join(lines) + "\n"
