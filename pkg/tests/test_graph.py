"""Data model, enumeration, and the .sg format."""

from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given

from sgelim import (
    MINUS,
    PLUS,
    SgParseError,
    SignedGraph,
    UnsignedGraph,
    build_graph,
    connected_components,
    enumerate_signed_graphs,
    flip_sign,
    flip_signs,
    induced_subgraph,
    neighborhood,
    parse_sg,
    serialize_sg,
    sign_restriction,
    signed_graph_count,
    signed_graph_from_index,
    underlying_graph,
)

from conftest import signed_graphs

G_EX_TEXT = "sgraph 4\ne 0 1 +\ne 1 3 +\ne 2 3 -\n"


def test_sign_flip_is_involution():
    assert flip_sign(PLUS) == MINUS
    assert flip_sign(MINUS) == PLUS
    assert flip_sign(flip_sign(PLUS)) == PLUS
    with pytest.raises(ValueError):
        flip_sign("?")


class TestBuildGraph:
    def test_worked_example(self, g_ex):
        assert g_ex.n == 4
        assert g_ex.edges() == [(0, 1, PLUS), (1, 3, PLUS), (2, 3, MINUS)]
        assert g_ex.edge_sign(3, 1) == PLUS
        assert g_ex.edge_sign(0, 2) is None
        assert g_ex.edge_counts() == (2, 1)

    def test_edgeless(self):
        g = build_graph(3, [])
        assert g.n == 3 and g.edges() == []

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError, match="self-loop"):
            build_graph(2, [(0, 0, PLUS)])

    def test_duplicate_pair_rejected_even_with_same_sign(self):
        with pytest.raises(ValueError, match="duplicate"):
            build_graph(2, [(0, 1, PLUS), (1, 0, PLUS)])
        with pytest.raises(ValueError, match="duplicate"):
            build_graph(2, [(0, 1, PLUS), (0, 1, MINUS)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError, match="out of range"):
            build_graph(2, [(0, 2, PLUS)])

    def test_accepts_either_endpoint_order(self):
        a = build_graph(3, [(2, 0, MINUS)])
        b = build_graph(3, [(0, 2, MINUS)])
        assert a == b


class TestNeighborhood:
    def test_worked_example(self, g_ex):
        assert neighborhood(g_ex, 3, PLUS) == {1}
        assert neighborhood(g_ex, 3, MINUS, closed=True) == {2, 3}

    def test_edgeless(self):
        assert neighborhood(build_graph(3, []), 0, PLUS) == set()

    def test_out_of_range(self, g_ex):
        with pytest.raises(ValueError):
            neighborhood(g_ex, 4, PLUS)


class TestInducedSubgraph:
    def test_worked_example_restriction(self, g_ex):
        sub, mapping = induced_subgraph(g_ex, {1, 2, 3})
        assert mapping == {1: 0, 2: 1, 3: 2}
        assert sub.edges() == [(0, 2, PLUS), (1, 2, MINUS)]

    def test_full_set_is_identity(self, g_ex):
        sub, mapping = induced_subgraph(g_ex, range(4))
        assert sub == g_ex
        assert mapping == {v: v for v in range(4)}

    def test_empty_set(self, g_ex):
        sub, mapping = induced_subgraph(g_ex, set())
        assert sub.n == 0 and mapping == {}

    def test_out_of_range(self, g_ex):
        with pytest.raises(ValueError):
            induced_subgraph(g_ex, {0, 7})


def test_sign_restriction_worked_example(g_ex):
    plus = sign_restriction(g_ex, PLUS)
    assert plus.edges() == [(0, 1), (1, 3)]
    minus = sign_restriction(g_ex, MINUS)
    assert minus.edges() == [(2, 3)]
    assert sign_restriction(build_graph(2, []), PLUS).edges() == []


def test_underlying_graph(g_ex):
    assert underlying_graph(g_ex).edges() == [(0, 1), (1, 3), (2, 3)]


def _unsigned_induced(H: UnsignedGraph, keep: list[int]) -> UnsignedGraph:
    relabel = {v: i for i, v in enumerate(keep)}
    adj = [0] * len(keep)
    for v in keep:
        for u in keep:
            if H.has_edge(u, v):
                adj[relabel[v]] |= 1 << relabel[u]
    return UnsignedGraph(len(keep), tuple(adj))


def test_induced_and_restriction_commute_exhaustively_n4():
    for G in enumerate_signed_graphs(4):
        for r in range(5):
            for keep in combinations(range(4), r):
                sub, _ = induced_subgraph(G, keep)
                for sign in (PLUS, MINUS):
                    assert sign_restriction(sub, sign) == _unsigned_induced(
                        sign_restriction(G, sign), sorted(keep)
                    )


@given(signed_graphs(max_n=6))
def test_sign_flip_commutes_with_restriction(G):
    flipped = flip_signs(G)
    assert sign_restriction(flipped, PLUS) == sign_restriction(G, MINUS)
    assert sign_restriction(flipped, MINUS) == sign_restriction(G, PLUS)
    assert flip_signs(flipped) == G


class TestComponents:
    def test_worked_example_is_connected(self, g_ex):
        assert connected_components(g_ex) == [(0, 1, 2, 3)]

    def test_edgeless_gives_singletons(self):
        assert connected_components(build_graph(3, [])) == [(0,), (1,), (2,)]

    def test_disjoint_union_with_isolated_vertex(self, g_ex):
        g = build_graph(5, [(u, v, s) for u, v, s in g_ex.edges()])
        assert connected_components(g) == [(0, 1, 2, 3), (4,)]


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 3), (3, 27), (4, 729)])
    def test_counts_small(self, n, count):
        assert signed_graph_count(n) == count
        graphs = list(enumerate_signed_graphs(n))
        assert len(graphs) == count
        assert len(set(graphs)) == count  # no duplicates

    def test_count_n5(self):
        assert signed_graph_count(5) == 59049
        seen = set()
        for G in enumerate_signed_graphs(5):
            seen.add((G.plus, G.minus))
        assert len(seen) == 59049

    def test_odometer_order(self):
        graphs = list(enumerate_signed_graphs(2))
        assert graphs[0].edges() == []
        assert graphs[1].edges() == [(0, 1, PLUS)]
        assert graphs[2].edges() == [(0, 1, MINUS)]

    def test_last_pair_varies_fastest(self):
        second = signed_graph_from_index(3, 1)
        assert second.edges() == [(1, 2, PLUS)]

    def test_cap(self):
        with pytest.raises(ValueError, match="cap"):
            list(enumerate_signed_graphs(7))
        with pytest.raises(ValueError):
            signed_graph_from_index(3, 27)

    def test_restartable(self):
        first = list(enumerate_signed_graphs(3))
        second = list(enumerate_signed_graphs(3))
        assert first == second


class TestSgFormat:
    def test_parse_worked_example(self, g_ex):
        assert parse_sg(G_EX_TEXT) == g_ex

    def test_serialize_worked_example(self, g_ex):
        assert serialize_sg(g_ex) == G_EX_TEXT

    def test_single_vertex(self):
        assert parse_sg("sgraph 1\n") == build_graph(1, [])
        assert serialize_sg(build_graph(1, [])) == "sgraph 1\n"

    def test_duplicate_pair_with_line_number(self):
        with pytest.raises(SgParseError, match="line 3: duplicate edge"):
            parse_sg("sgraph 2\ne 0 1 +\ne 1 0 -\n")

    def test_comments_whitespace_crlf(self, g_ex):
        text = "# a comment\r\n  sgraph   4 # trailing\r\n\r\ne 0 1 +\r\n e  1  3  + \ne 2 3 -"
        assert parse_sg(text) == g_ex

    def test_missing_header(self):
        with pytest.raises(SgParseError, match="header"):
            parse_sg("e 0 1 +\n")
        with pytest.raises(SgParseError, match="missing"):
            parse_sg("# nothing\n")

    def test_bad_lines(self):
        with pytest.raises(SgParseError, match="line 1"):
            parse_sg("sgraph x\n")
        with pytest.raises(SgParseError, match="line 2"):
            parse_sg("sgraph 2\nedge 0 1 +\n")
        with pytest.raises(SgParseError, match="line 2"):
            parse_sg("sgraph 2\ne 0 1 ?\n")
        with pytest.raises(SgParseError, match="out of range"):
            parse_sg("sgraph 2\ne 0 5 +\n")
        with pytest.raises(SgParseError, match="duplicate 'sgraph'"):
            parse_sg("sgraph 2\nsgraph 2\n")
        with pytest.raises(SgParseError, match="self-loop"):
            parse_sg("sgraph 2\ne 1 1 +\n")

    def test_round_trip_exhaustive_n4(self):
        for G in enumerate_signed_graphs(4):
            assert parse_sg(serialize_sg(G)) == G

    @given(signed_graphs(max_n=6))
    def test_round_trip_property(self, G):
        assert parse_sg(serialize_sg(G)) == G


def test_signed_graph_validation_rejects_bad_masks():
    with pytest.raises(ValueError, match="symmetric"):
        SignedGraph(2, (2, 0), (0, 0))
    with pytest.raises(ValueError, match="both signs"):
        SignedGraph(2, (2, 1), (2, 1))
    with pytest.raises(ValueError, match="self-loop"):
        SignedGraph(1, (1,), (0,))
