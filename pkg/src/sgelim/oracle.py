"""Ground-truth brute force, canonical fixtures, and the cross-check sweep.

The brute-force decider shares nothing with the greedy construction beyond
the ordering check itself, so agreement between the two (and with the
condition-based recognizer and the restricted-class checkers) over every
labelled graph of a given size is a meaningful end-to-end test.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from itertools import combinations, permutations
from multiprocessing import get_context

from .characterize import characterize, verify_certificate
from .graph import (
    MINUS,
    PLUS,
    Sign,
    SignedGraph,
    build_graph,
    connected_components,
    flip_sign,
    serialize_sg,
    signed_graph_count,
    signed_graph_from_index,
)
from .invariant import _profile
from .seo import Ordering, _greedy_sequence, _seo_ok, _seo_sequences, _ss_ok
from .special import (
    chordal_underlying_check,
    complete_graph_check,
    four_vertex_check,
    low_independence_check,
    remark_equivalence_check,
)

BRUTE_FORCE_CAP = 8
CROSS_CHECK_CAP = 6

DEFAULT_CHECKERS = ("greedy", "characterize", "oracle", "special")
VERIFICATION_CHECKERS = ("invariance", "remark", "altpath", "components", "hereditary")
ALL_CHECKERS = DEFAULT_CHECKERS + VERIFICATION_CHECKERS


def brute_force_se(G: SignedGraph) -> Ordering | None:
    """Try all n! orderings in lexicographic sequence order; return the
    first that passes the SEO check, or ``None``."""
    if G.n > BRUTE_FORCE_CAP:
        raise ValueError(f"n={G.n} above brute-force cap {BRUTE_FORCE_CAP}")
    plus, minus = G.plus, G.minus
    for seq in permutations(range(G.n)):
        if _seo_ok(plus, minus, seq):
            return Ordering(seq)
    return None


FAMILY_KINDS = ("mountain", "hill", "capped_mountain", "capped_hill")


def build_family(kind: str, sign: Sign, n: int) -> SignedGraph:
    """Canonical mountain/hill fixtures and their capped (SE) variants.

    Path vertices come first (``0 .. n-1``), then the apex(es).  Mountains
    need ``n >= 3``, hills ``n >= 2``.  The capped variants add the single
    extra ``sign``-edge from the (first) apex to the last path vertex,
    which turns the non-SE pattern into an SE graph.
    """
    if kind not in FAMILY_KINDS:
        raise ValueError(f"unknown family kind {kind!r}")
    if sign not in (PLUS, MINUS):
        raise ValueError(f"not a sign: {sign!r}")
    other = flip_sign(sign)
    edges: list[tuple[int, int, Sign]] = []
    if kind in ("mountain", "capped_mountain"):
        if n < 3:
            raise ValueError("mountains need a path of at least three vertices")
        apex = n
        edges += [(i, i + 1, other) for i in range(n - 1)]
        edges += [(apex, i, sign) for i in range(1, n - 1)]
        if kind == "capped_mountain":
            edges.append((apex, n - 1, sign))
        return build_graph(n + 1, edges)
    if n < 2:
        raise ValueError("hills need a path of at least two vertices")
    w1, w2 = n, n + 1
    edges += [(i, i + 1, other) for i in range(n - 1)]
    edges.append((w1, w2, sign))
    edges += [(w1, i, sign) for i in range(n - 1)]
    edges += [(w2, i, sign) for i in range(1, n)]
    if kind == "capped_hill":
        edges.append((w1, n - 1, sign))
    return build_graph(n + 2, edges)


# ---------------------------------------------------------------------------
# Cross-check harness.


@dataclass(frozen=True)
class MismatchRecord:
    """One disagreement, embedding the replayable graph serialization."""

    index: int
    sg: str
    verdicts: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class CrossCheckReport:
    n: int
    instances: int
    mismatches: tuple[MismatchRecord, ...]
    elapsed: float
    checkers_run: tuple[str, ...]
    stats: tuple[tuple[str, int], ...]

    def to_text(self, timing: bool = False) -> str:
        lines = [f"crosscheck n={self.n} instances={self.instances} mismatches={len(self.mismatches)}"]
        for record in self.mismatches:
            verdicts = ",".join(f"{name}:{value}" for name, value in record.verdicts)
            sg = record.sg.replace("\n", "\\n")
            lines.append(f"mismatch index={record.index} verdicts={verdicts} sg={sg}")
        if timing:
            lines.append(f"timing: {self.elapsed:.3f}s")
        return "\n".join(lines) + "\n"

    def to_json(self, timing: bool = False) -> str:
        doc = {
            "n": self.n,
            "instances": self.instances,
            "mismatch_count": len(self.mismatches),
            "mismatches": [
                {"index": r.index, "sg": r.sg, "verdicts": dict(r.verdicts)} for r in self.mismatches
            ],
            "checkers_run": list(self.checkers_run),
            "stats": dict(self.stats),
        }
        if timing:
            doc["elapsed"] = self.elapsed
        return json.dumps(doc, sort_keys=True)


def _altpath_lemma_ok(plus: tuple[int, ...], minus: tuple[int, ...], n: int) -> bool:
    """Alternating-path property expected of every SE graph: each pattern
    ``u ~s v ~(-s) w ~s x`` has ``u ~s x`` and (``u ~s w`` or ``v ~s x``)."""
    for adj, coadj in ((plus, minus), (minus, plus)):
        for u in range(n):
            au = adj[u]
            rest_v = au
            while rest_v:
                low_v = rest_v & -rest_v
                rest_v ^= low_v
                v = low_v.bit_length() - 1
                rest_w = coadj[v] & ~(1 << u)
                while rest_w:
                    low_w = rest_w & -rest_w
                    rest_w ^= low_w
                    w = low_w.bit_length() - 1
                    xs = adj[w] & ~(1 << u) & ~(1 << v)
                    if not xs:
                        continue
                    if xs & ~au:
                        return False  # some x with u !~s x
                    if not au >> w & 1 and xs & ~adj[v]:
                        return False  # u !~s w and some x with v !~s x
    return True


def _examine(
    G: SignedGraph,
    checkers: tuple[str, ...],
    stats: dict[str, int],
) -> tuple[tuple[str, str], ...] | None:
    """Run the selected checkers on one graph.

    Returns the verdict table when something disagrees or fails, else
    ``None``.  SE/not-SE verdicts must all match; verification checkers
    must report ok.
    """
    plus, minus, n = G.plus, G.minus, G.n
    full = (1 << n) - 1
    verdicts: list[tuple[str, str]] = []
    se_votes: list[bool] = []
    failed = False

    greedy_seq = _greedy_sequence(plus, minus, full)
    greedy_se = greedy_seq is not None
    if "greedy" in checkers:
        if greedy_se and not _seo_ok(plus, minus, greedy_seq):
            verdicts.append(("greedy", "unsound-ordering"))
            failed = True
        else:
            verdicts.append(("greedy", "se" if greedy_se else "not-se"))
            se_votes.append(greedy_se)

    if "characterize" in checkers:
        verdict = characterize(G)
        flags_se = verdict.c1_plus and verdict.c1_minus and verdict.c2 and verdict.c3
        if verdict.se != flags_se:
            verdicts.append(("characterize", "flag-status-disagreement"))
            failed = True
        elif verdict.se and not _seo_ok(plus, minus, verdict.ordering.seq):
            verdicts.append(("characterize", "unsound-ordering"))
            failed = True
        elif verdict.certificate is not None and (
            (reason := verify_certificate(G, verdict.certificate)) is not None
        ):
            verdicts.append(("characterize", f"bad-certificate:{reason}"))
            failed = True
        else:
            if verdict.certificate is not None:
                stats["certificates_verified"] = stats.get("certificates_verified", 0) + 1
            verdicts.append(("characterize", "se" if verdict.se else "not-se"))
            se_votes.append(verdict.se)

    if "oracle" in checkers:
        oracle_order = brute_force_se(G)
        verdicts.append(("oracle", "se" if oracle_order is not None else "not-se"))
        se_votes.append(oracle_order is not None)

    if "special" in checkers:
        for checker in (
            four_vertex_check,
            chordal_underlying_check,
            low_independence_check,
            complete_graph_check,
        ):
            special = checker(G)
            if special.applicable:
                verdicts.append((f"special-{special.name}", "se" if special.se else "not-se"))
                se_votes.append(special.se)
            else:
                verdicts.append((f"special-{special.name}", "n/a"))

    if "invariance" in checkers:
        # One enumeration pass covers three facts: SEO existence matches
        # the greedy outcome, all SEOs share one canonical profile, and
        # the set of last vertices over all SEOs is exactly the set of
        # signed-simplicial vertices.
        profile = None
        lasts: set[int] = set()
        count = 0
        ok = True
        for seq in _seo_sequences(plus, minus, full):
            count += 1
            if n:
                lasts.add(seq[-1])
            p = _profile(plus, minus, seq)
            if profile is None:
                profile = p
            elif p != profile:
                ok = False
                break
        stats["seos_enumerated"] = stats.get("seos_enumerated", 0) + count
        if not ok:
            verdicts.append(("invariance", "profile-not-invariant"))
            failed = True
        elif (count > 0) != greedy_se:
            verdicts.append(("invariance", "enumeration-vs-greedy"))
            failed = True
        elif greedy_se and profile != _profile(plus, minus, greedy_seq):
            verdicts.append(("invariance", "greedy-profile-differs"))
            failed = True
        elif greedy_se and n and lasts != {
            v for v in range(n) if _ss_ok(plus, minus, v, full)
        }:
            verdicts.append(("invariance", "last-vertices-not-simplicial-set"))
            failed = True
        else:
            verdicts.append(("invariance", "ok"))

    if "remark" in checkers:
        if remark_equivalence_check(G):
            verdicts.append(("remark", "ok"))
        else:
            verdicts.append(("remark", "four-vertex-route-disagrees"))
            failed = True

    if "altpath" in checkers and greedy_se:
        if _altpath_lemma_ok(plus, minus, n):
            verdicts.append(("altpath", "ok"))
        else:
            verdicts.append(("altpath", "lemma-fails-on-se-graph"))
            failed = True

    if "components" in checkers:
        parts = connected_components(G)
        parts_se = all(
            _greedy_sequence(plus, minus, sum(1 << v for v in part)) is not None for part in parts
        )
        if parts_se == greedy_se:
            verdicts.append(("components", "ok"))
        else:
            verdicts.append(("components", "component-decomposition-fails"))
            failed = True

    if "hereditary" in checkers and greedy_se:
        ok = all(
            _greedy_sequence(plus, minus, mask) is not None for mask in range(full)
        )
        if ok:
            verdicts.append(("hereditary", "ok"))
        else:
            verdicts.append(("hereditary", "induced-subgraph-not-se"))
            failed = True

    if failed or len(set(se_votes)) > 1:
        return tuple(verdicts)
    return None


def _sweep_range(args: tuple[int, int, int, tuple[str, ...]]) -> tuple[list[tuple[int, str, tuple[tuple[str, str], ...]]], dict[str, int]]:
    n, lo, hi, checkers = args
    mismatches = []
    stats: dict[str, int] = {}
    for index in range(lo, hi):
        G = signed_graph_from_index(n, index)
        bad = _examine(G, checkers, stats)
        if bad is not None:
            mismatches.append((index, serialize_sg(G), bad))
    return mismatches, stats


def cross_check(
    n: int,
    checkers: tuple[str, ...] = DEFAULT_CHECKERS,
    workers: int = 1,
    with_oracle: bool | None = None,
    long_run: bool = False,
) -> CrossCheckReport:
    """Run the selected checkers over every labelled signed graph on ``n``
    vertices and collect disagreements.

    The brute-force oracle is included for ``n <= 5`` unless forced via
    ``with_oracle``; ``n = 6`` (about 14.3 million graphs) requires
    ``long_run=True``.  Results are merged in enumeration order, so the
    report content is independent of ``workers``.
    """
    if n > CROSS_CHECK_CAP:
        raise ValueError(f"n={n} above cross-check cap {CROSS_CHECK_CAP}")
    if n == 6 and not long_run:
        raise ValueError("n=6 sweeps ~14.3M graphs; pass long_run=True to confirm")
    unknown = set(checkers) - set(ALL_CHECKERS)
    if unknown:
        raise ValueError(f"unknown checkers: {sorted(unknown)}")
    oracle_enabled = with_oracle if with_oracle is not None else n <= 5
    effective = tuple(c for c in checkers if c != "oracle" or oracle_enabled)

    total = signed_graph_count(n)
    start = time.perf_counter()
    if workers <= 1:
        raw_mismatches, stats = _sweep_range((n, 0, total, effective))
    else:
        chunk_count = min(total, workers * 8)
        bounds = [total * i // chunk_count for i in range(chunk_count + 1)]
        tasks = [(n, bounds[i], bounds[i + 1], effective) for i in range(chunk_count)]
        raw_mismatches = []
        stats = {}
        with get_context("fork").Pool(workers) as pool:
            for part, part_stats in pool.map(_sweep_range, tasks):
                raw_mismatches.extend(part)
                for key, value in part_stats.items():
                    stats[key] = stats.get(key, 0) + value
    elapsed = time.perf_counter() - start
    records = tuple(MismatchRecord(i, sg, v) for i, sg, v in raw_mismatches)
    return CrossCheckReport(
        n=n,
        instances=total,
        mismatches=records,
        elapsed=elapsed,
        checkers_run=effective,
        stats=tuple(sorted(stats.items())),
    )
