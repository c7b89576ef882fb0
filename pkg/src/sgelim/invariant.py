"""Degree-pair profile of an ordering and the derived graph invariants.

For an ordering ``nu`` and position ``i``, the degree pair counts the
positive and negative neighbours of the ``i``-th vertex among positions
``<= i``.  The multiset of these pairs is the same for every SEO of a
signed-eliminable graph, so its canonical form (and any projection of it,
such as the per-position difference d+ - d-) is a graph invariant.
"""

from __future__ import annotations

from .graph import SignedGraph
from .seo import (
    ENUMERATE_SEOS_CAP,
    NotSignedEliminableError,
    Ordering,
    _greedy_sequence,
    _seo_sequences,
)

DegreePair = tuple[int, int]
DegreeProfile = tuple[DegreePair, ...]


def _profile(plus: tuple[int, ...], minus: tuple[int, ...], seq: tuple[int, ...]) -> DegreeProfile:
    earlier = 0
    pairs = []
    for w in seq:
        pairs.append(((plus[w] & earlier).bit_count(), (minus[w] & earlier).bit_count()))
        earlier |= 1 << w
    pairs.sort()
    return tuple(pairs)


def degree_profile(G: SignedGraph, nu: Ordering) -> DegreeProfile:
    """Canonical (sorted) multiset of per-position degree pairs.

    Defined for any ordering; only its independence from the ordering is
    special to SEOs, so callers probing that contrast may pass arbitrary
    permutations.
    """
    if nu.n != G.n:
        raise ValueError(f"ordering has {nu.n} vertices, graph has {G.n}")
    return _profile(G.plus, G.minus, nu.seq)


def deg_tilde(G: SignedGraph) -> tuple[int, ...]:
    """Sorted multiset of d+ - d- over positions of a SEO of ``G``.

    Requires a signed-eliminable graph; the value does not depend on which
    SEO the greedy construction returns.
    """
    seq = _greedy_sequence(G.plus, G.minus, (1 << G.n) - 1)
    if seq is None:
        raise NotSignedEliminableError("graph is not signed-eliminable")
    return tuple(sorted(a - b for a, b in _profile(G.plus, G.minus, seq)))


def invariance_check(G: SignedGraph, cap: int = ENUMERATE_SEOS_CAP) -> bool:
    """Empirically confirm ordering-independence of the profile on ``G``.

    Enumerates every SEO and compares canonical profiles; true iff all are
    identical.  Raises on non-signed-eliminable input or when ``G`` exceeds
    the enumeration cap.
    """
    if G.n > cap:
        raise ValueError(f"n={G.n} above SEO enumeration cap {cap}")
    first: DegreeProfile | None = None
    for seq in _seo_sequences(G.plus, G.minus, (1 << G.n) - 1):
        profile = _profile(G.plus, G.minus, seq)
        if first is None:
            first = profile
        elif profile != first:
            return False
    if first is None:
        raise NotSignedEliminableError("graph is not signed-eliminable")
    return True


def format_profile(profile: DegreeProfile) -> str:
    """Text form ``profile: (a,b) (c,d) ...`` (canonical order)."""
    body = " ".join(f"({a},{b})" for a, b in profile)
    return "profile: " + body if body else "profile:"


def format_deg_tilde(values: tuple[int, ...]) -> str:
    """Text form ``degt: x y z ...`` (sorted ascending)."""
    body = " ".join(str(x) for x in values)
    return "degt: " + body if body else "degt:"
