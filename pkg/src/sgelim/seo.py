"""Signed elimination orderings: verification, construction, enumeration.

An ordering is a bijection from the vertex set to ``1..n``.  It is a
signed elimination ordering (SEO) when every triple ``u, v, w`` with
``nu(u) < nu(w) > nu(v)`` satisfies, for each sign ``s``:

  E1: if ``u ~s w ~s v`` then ``u ~s v``  (elimination within one sign);
  E2: if ``u ~s v ~(-s) w`` then ``u ~s w``  (cross-sign absorption).

A vertex is signed-simplicial when it can legally come last:

  S1: its closed ``s``-neighbourhood is a clique in the ``s``-restriction,
      for both signs;
  S2: ``u ~(-s) w ~s v`` implies ``u ~(-s) v``, for both signs.

An ordering is a SEO exactly when each prefix ends in a vertex that is
signed-simplicial in the graph induced on that prefix, which drives both
the greedy construction and the backtracking enumeration below.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .graph import MINUS, PLUS, Sign, SignedGraph, _bits

ENUMERATE_SEOS_CAP = 8


class NotSignedEliminableError(ValueError):
    """Raised by operations that require a signed-eliminable input."""


@dataclass(frozen=True)
class Ordering:
    """Vertex ordering, stored as the sequence ``seq[i-1] = nu^-1(i)``."""

    seq: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "seq", tuple(self.seq))
        n = len(self.seq)
        mask = 0
        for v in self.seq:
            if not isinstance(v, int) or not 0 <= v < n:
                raise ValueError(f"not a permutation of 0..{n - 1}: {self.seq}")
            mask |= 1 << v
        if mask != (1 << n) - 1:
            raise ValueError(f"not a permutation of 0..{n - 1}: {self.seq}")

    @property
    def n(self) -> int:
        return len(self.seq)

    def positions(self) -> tuple[int, ...]:
        """1-based position of every vertex: ``positions()[v] = nu(v)``."""
        pos = [0] * self.n
        for i, v in enumerate(self.seq, start=1):
            pos[v] = i
        return tuple(pos)


def format_ordering(nu: Ordering) -> str:
    """One-line text form: vertex ids in increasing position order."""
    return " ".join(str(v) for v in nu.seq)


def parse_ordering(text: str, n: int) -> Ordering:
    try:
        seq = tuple(int(tok) for tok in text.split())
    except ValueError:
        raise ValueError(f"ordering tokens must be integers: {text!r}") from None
    if len(seq) != n:
        raise ValueError(f"ordering lists {len(seq)} vertices, graph has {n}")
    return Ordering(seq)


@dataclass(frozen=True)
class SeoViolation:
    """First failing triple of an ordering check.

    ``u`` and ``v`` precede ``w``.  For E1 the edges ``uw`` and ``vw`` carry
    ``sign`` and ``uv`` is missing in that sign; for E2 the edge ``uv``
    carries ``sign``, ``vw`` carries the opposite sign, and ``uw`` is
    missing in ``sign``.
    """

    kind: str  # "E1" or "E2"
    sign: Sign
    u: int
    v: int
    w: int


@dataclass(frozen=True)
class SimplicialViolation:
    """Witness that ``v`` is not signed-simplicial.

    S1: ``u`` and ``w`` are ``sign``-neighbours of ``v`` with no
    ``sign``-edge between them.  S2: ``u ~(-sign) w ~sign v`` holds but
    ``u ~(-sign) v`` does not.
    """

    kind: str  # "S1" or "S2"
    sign: Sign
    v: int
    u: int
    w: int


# ---------------------------------------------------------------------------
# Mask-level kernels.  These operate on raw per-vertex bitmask tuples so the
# exhaustive sweeps can stay allocation-free; the public API wraps them.


def _seo_ok(plus: tuple[int, ...], minus: tuple[int, ...], seq: tuple[int, ...]) -> bool:
    """Decide the SEO property for a full vertex sequence."""
    earlier = 0
    for w in seq:
        for adj, coadj in ((plus, minus), (minus, plus)):
            aw = adj[w] & earlier
            if aw:
                caw = coadj[w]
                rest = aw
                while rest:
                    low = rest & -rest
                    rest ^= low
                    v = low.bit_length() - 1
                    if aw & ~adj[v] & ~low:
                        return False  # E1: two earlier same-sign neighbours not adjacent
                    if coadj[v] & earlier & ~caw:
                        return False  # E2: earlier opposite-sign edge not absorbed
        earlier |= 1 << w
    return True


def _ss_ok(plus: tuple[int, ...], minus: tuple[int, ...], v: int, mask: int) -> bool:
    """Is ``v`` signed-simplicial in the subgraph induced on ``mask``?"""
    for adj, coadj in ((plus, minus), (minus, plus)):
        av = adj[v] & mask
        if av:
            cav = coadj[v]
            rest = av
            while rest:
                low = rest & -rest
                rest ^= low
                w = low.bit_length() - 1
                if av & ~adj[w] & ~low:
                    return False  # S1 fails for this sign
                if coadj[w] & mask & ~cav:
                    return False  # S2 fails for this sign
    return True


def _greedy_sequence(
    plus: tuple[int, ...], minus: tuple[int, ...], mask: int
) -> tuple[int, ...] | None:
    """Greedy SEO construction on the subgraph induced on ``mask``.

    Repeatedly assigns the lowest-indexed signed-simplicial vertex the
    highest remaining position.  Returns the position sequence (original
    labels), or ``None`` when some residual graph has no signed-simplicial
    vertex, which happens exactly when the graph is not signed-eliminable.
    """
    out: list[int] = []
    alive = mask
    while alive:
        rest = alive
        found = -1
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            if _ss_ok(plus, minus, v, alive):
                found = v
                break
        if found < 0:
            return None
        out.append(found)
        alive &= ~(1 << found)
    out.reverse()
    return tuple(out)


def _seo_sequences(
    plus: tuple[int, ...], minus: tuple[int, ...], mask: int
) -> Iterator[tuple[int, ...]]:
    """Yield every SEO of the subgraph induced on ``mask``, in lexicographic
    order of the position sequence.

    Backtracks over prefixes whose last vertex is signed-simplicial in the
    prefix-induced subgraph; that prefix condition characterizes SEOs, so
    nothing is missed and dead prefixes are pruned early.
    """
    prefix: list[int] = []

    def extend(used: int) -> Iterator[tuple[int, ...]]:
        if used == mask:
            yield tuple(prefix)
            return
        rest = mask & ~used
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            if _ss_ok(plus, minus, v, used | low):
                prefix.append(v)
                yield from extend(used | low)
                prefix.pop()

    if mask == 0:
        yield ()
        return
    yield from extend(0)


# ---------------------------------------------------------------------------
# Public operations.


def _require_matching(G: SignedGraph, nu: Ordering) -> None:
    if nu.n != G.n:
        raise ValueError(f"ordering has {nu.n} vertices, graph has {G.n}")


def is_seo(G: SignedGraph, nu: Ordering) -> SeoViolation | None:
    """Check the SEO conditions; return ``None`` on pass.

    On failure returns the first violation under a fixed scan order:
    increasing position of ``w``, then position of ``u``, then position of
    ``v``, with E1 before E2 and ``+`` before ``-`` at each triple.
    """
    _require_matching(G, nu)
    if _seo_ok(G.plus, G.minus, nu.seq):
        return None
    seq = nu.seq
    plus, minus = G.plus, G.minus
    for k in range(1, len(seq)):
        w = seq[k]
        for i in range(k):
            u = seq[i]
            for j in range(k):
                if j == i:
                    continue
                v = seq[j]
                for sign, adj in ((PLUS, plus), (MINUS, minus)):
                    if adj[w] >> u & 1 and adj[w] >> v & 1 and not adj[u] >> v & 1:
                        return SeoViolation("E1", sign, u, v, w)
                for sign, adj, coadj in ((PLUS, plus, minus), (MINUS, minus, plus)):
                    if adj[u] >> v & 1 and coadj[v] >> w & 1 and not adj[u] >> w & 1:
                        return SeoViolation("E2", sign, u, v, w)
    raise AssertionError("fast and scanning SEO checks disagree")


def is_seo_via_weights(G: SignedGraph, nu: Ordering) -> bool:
    """SEO check through the weight reformulation.

    With pair weights +1 / -1 / 0 for positive / negative / absent, an
    ordering is a SEO iff for every triple ``u, v, w`` with ``w`` latest,
    the median of the weights of ``uv``, ``vw``, ``uw`` equals the weight
    of ``uv`` -- except when ``uw`` and ``vw`` are both absent, where the
    triple is unconstrained.
    """
    _require_matching(G, nu)
    seq = nu.seq

    def weight(a: int, b: int) -> int:
        if G.plus[a] >> b & 1:
            return 1
        if G.minus[a] >> b & 1:
            return -1
        return 0

    for k in range(2, len(seq)):
        w = seq[k]
        for i in range(k):
            u = seq[i]
            uw = weight(u, w)
            for j in range(i + 1, k):
                v = seq[j]
                vw = weight(v, w)
                if uw == 0 and vw == 0:
                    continue
                if sorted((weight(u, v), vw, uw))[1] != weight(u, v):
                    return False
    return True


def is_signed_simplicial(G: SignedGraph, v: int) -> SimplicialViolation | None:
    """Check conditions S1 and S2 for ``v``; return ``None`` on pass.

    Violations are reported in a fixed order: S1 with sign ``+`` then
    ``-`` (witness pairs scanned lexicographically), then S2 likewise.
    """
    if not 0 <= v < G.n:
        raise ValueError(f"vertex out of range: {v}")
    for sign in (PLUS, MINUS):
        av = sorted(_bits(G.adj(v, sign)))
        for a in range(len(av)):
            for b in range(a + 1, len(av)):
                if not G.adj(av[a], sign) >> av[b] & 1:
                    return SimplicialViolation("S1", sign, v, av[a], av[b])
    for sign in (PLUS, MINUS):
        other = MINUS if sign == PLUS else PLUS
        for w in _bits(G.adj(v, sign)):
            bad = G.adj(w, other) & ~G.adj(v, other)
            for u in _bits(bad):
                return SimplicialViolation("S2", sign, v, u, w)
    return None


def signed_simplicial_set(G: SignedGraph) -> set[int]:
    """All signed-simplicial vertices of ``G``."""
    full = (1 << G.n) - 1
    return {v for v in range(G.n) if _ss_ok(G.plus, G.minus, v, full)}


def greedy_seo(G: SignedGraph) -> Ordering | None:
    """Construct a SEO greedily, or return ``None`` when none exists.

    Ties are broken towards the lowest vertex index; any signed-simplicial
    choice works, so the tie-break only pins down which SEO is returned.
    """
    seq = _greedy_sequence(G.plus, G.minus, (1 << G.n) - 1)
    return None if seq is None else Ordering(seq)


def enumerate_seos(G: SignedGraph, cap: int = ENUMERATE_SEOS_CAP) -> Iterator[Ordering]:
    """Yield every SEO of ``G`` exactly once (lexicographic sequences).

    Agrees with filtering all n! orderings through :func:`is_seo`; the
    prefix-based backtracking only prunes orderings that cannot pass.
    """
    if G.n > cap:
        raise ValueError(f"n={G.n} above SEO enumeration cap {cap}")
    for seq in _seo_sequences(G.plus, G.minus, (1 << G.n) - 1):
        yield Ordering(seq)
