"""Ordering checks, signed-simplicial vertices, greedy construction,
and SEO enumeration."""

from __future__ import annotations

from itertools import combinations, permutations

import pytest
from hypothesis import given

from sgelim import (
    MINUS,
    PLUS,
    Ordering,
    build_graph,
    build_family,
    chordality_check,
    connected_components,
    enumerate_seos,
    enumerate_signed_graphs,
    format_ordering,
    greedy_seo,
    induced_subgraph,
    is_seo,
    is_seo_via_weights,
    is_signed_simplicial,
    parse_ordering,
    sign_restriction,
    signed_simplicial_set,
)

from conftest import graphs_with_orderings, signed_graphs


class TestOrdering:
    def test_permutation_enforced(self):
        Ordering((2, 0, 1))
        with pytest.raises(ValueError, match="permutation"):
            Ordering((0, 0, 1))
        with pytest.raises(ValueError, match="permutation"):
            Ordering((0, 3))

    def test_positions(self):
        nu = Ordering((2, 0, 1))
        assert nu.positions() == (2, 3, 1)

    def test_text_forms(self):
        nu = parse_ordering("2 1 3 0", 4)
        assert nu.seq == (2, 1, 3, 0)
        assert format_ordering(nu) == "2 1 3 0"
        with pytest.raises(ValueError, match="lists 3"):
            parse_ordering("0 1 2", 4)
        with pytest.raises(ValueError, match="integers"):
            parse_ordering("a b", 2)


class TestIsSeo:
    def test_worked_example_identity_passes(self, g_ex):
        assert is_seo(g_ex, Ordering((0, 1, 2, 3))) is None

    def test_single_vertex(self):
        assert is_seo(build_graph(1, []), Ordering((0,))) is None

    def test_empty_graph(self):
        assert is_seo(build_graph(0, []), Ordering(())) is None

    def test_mountain_identity_first_violation(self, m3):
        violation = is_seo(m3, Ordering((0, 1, 2, 3)))
        assert violation is not None
        assert (violation.kind, violation.sign) == ("E2", MINUS)
        assert (violation.u, violation.v, violation.w) == (0, 1, 3)
        # the cited edges must exist and the implied edge must be absent
        assert m3.edge_sign(0, 1) == MINUS
        assert m3.edge_sign(1, 3) == PLUS
        assert m3.edge_sign(0, 3) is None

    def test_e1_first_violation(self):
        g = build_graph(3, [(0, 1, PLUS), (1, 2, PLUS)])
        violation = is_seo(g, Ordering((0, 2, 1)))
        assert violation is not None
        assert (violation.kind, violation.sign) == ("E1", PLUS)
        assert (violation.u, violation.v, violation.w) == (0, 2, 1)

    def test_length_mismatch(self, g_ex):
        with pytest.raises(ValueError, match="ordering has"):
            is_seo(g_ex, Ordering((0, 1, 2)))

    def test_mountains_fail_under_every_ordering(self, m3):
        assert all(is_seo(m3, Ordering(p)) is not None for p in permutations(range(4)))


class TestWeightFormulation:
    def test_worked_example(self, g_ex):
        assert is_seo_via_weights(g_ex, Ordering((0, 1, 2, 3))) is True

    def test_mountain_fails(self, m3):
        assert is_seo_via_weights(m3, Ordering((0, 1, 2, 3))) is False

    def test_edgeless_any_order(self):
        g = build_graph(4, [])
        assert all(is_seo_via_weights(g, Ordering(p)) for p in permutations(range(4)))

    def test_matches_direct_check_exhaustively_n_le_4(self):
        for n in range(5):
            perms = [Ordering(p) for p in permutations(range(n))]
            for G in enumerate_signed_graphs(n):
                for nu in perms:
                    assert (is_seo(G, nu) is None) == is_seo_via_weights(G, nu)

    @given(graphs_with_orderings(max_n=5))
    def test_matches_direct_check_property(self, pair):
        G, seq = pair
        nu = Ordering(seq)
        assert (is_seo(G, nu) is None) == is_seo_via_weights(G, nu)


class TestSignedSimplicial:
    def test_worked_example_vertices(self, g_ex):
        assert is_signed_simplicial(g_ex, 0) is None
        assert is_signed_simplicial(g_ex, 3) is None
        v1 = is_signed_simplicial(g_ex, 1)
        assert v1 is not None and v1.kind == "S1"
        v2 = is_signed_simplicial(g_ex, 2)
        assert v2 is not None and v2.kind == "S2"
        # S2 witness: 1 ~+ 3 ~- 2 but 1 ~- 2 missing
        assert (v2.sign, v2.v, v2.u, v2.w) == (MINUS, 2, 1, 3)

    def test_mountain_has_no_signed_simplicial_vertex(self, m3):
        assert all(is_signed_simplicial(m3, v) is not None for v in range(4))

    def test_isolated_vertex_passes(self, g_ex):
        g = build_graph(5, [(u, v, s) for u, v, s in g_ex.edges()])
        assert is_signed_simplicial(g, 4) is None

    def test_out_of_range(self, g_ex):
        with pytest.raises(ValueError):
            is_signed_simplicial(g_ex, 9)

    def test_set_examples(self, g_ex, m3):
        assert signed_simplicial_set(g_ex) == {0, 3}
        assert signed_simplicial_set(m3) == set()
        assert signed_simplicial_set(build_graph(3, [])) == {0, 1, 2}

    def test_set_matches_per_vertex_check(self):
        for G in enumerate_signed_graphs(4):
            assert signed_simplicial_set(G) == {
                v for v in range(4) if is_signed_simplicial(G, v) is None
            }


class TestGreedy:
    def test_worked_example_trace(self, g_ex):
        nu = greedy_seo(g_ex)
        assert nu.seq == (2, 1, 3, 0)
        assert is_seo(g_ex, nu) is None

    def test_mountain_not_se(self, m3):
        assert greedy_seo(m3) is None

    def test_capped_mountain(self, cm3):
        nu = greedy_seo(cm3)
        assert nu is not None and is_seo(cm3, nu) is None
        # the stated ordering (apex first, then the path) is also a SEO
        assert is_seo(cm3, Ordering((3, 0, 1, 2))) is None

    @given(signed_graphs(max_n=5))
    def test_greedy_sound(self, G):
        nu = greedy_seo(G)
        if nu is not None:
            assert is_seo(G, nu) is None

    def test_greedy_matches_exhaustive_filter_n_le_4(self):
        for n in range(5):
            perms = list(permutations(range(n)))
            for G in enumerate_signed_graphs(n):
                exists = any(is_seo(G, Ordering(p)) is None for p in perms)
                assert (greedy_seo(G) is not None) == exists


class TestEnumerateSeos:
    def test_single_vertex(self):
        assert [nu.seq for nu in enumerate_seos(build_graph(1, []))] == [(0,)]

    def test_mountain_empty(self, m3):
        assert list(enumerate_seos(m3)) == []

    def test_worked_example_matches_brute_filter(self, g_ex):
        expected = [p for p in permutations(range(4)) if is_seo(g_ex, Ordering(p)) is None]
        assert [nu.seq for nu in enumerate_seos(g_ex)] == expected
        assert len(expected) > 0

    def test_prefix_characterization_exhaustive_n_le_4(self):
        for n in range(5):
            perms = list(permutations(range(n)))
            for G in enumerate_signed_graphs(n):
                expected = [p for p in perms if is_seo(G, Ordering(p)) is None]
                assert [nu.seq for nu in enumerate_seos(G)] == expected

    def test_cap(self):
        with pytest.raises(ValueError, match="cap"):
            list(enumerate_seos(build_graph(9, [])))
        assert sum(1 for _ in enumerate_seos(build_graph(9, []), cap=9)) == 362880

    def test_choice_freedom_n_le_4(self):
        # every signed-simplicial vertex closes some SEO, and only those do
        for n in range(1, 5):
            for G in enumerate_signed_graphs(n):
                lasts = {nu.seq[-1] for nu in enumerate_seos(G)}
                if lasts:
                    assert lasts == signed_simplicial_set(G)
                else:
                    assert greedy_seo(G) is None


class TestClosureProperties:
    def test_hereditary_n_le_4(self):
        for n in range(5):
            for G in enumerate_signed_graphs(n):
                if greedy_seo(G) is None:
                    continue
                for r in range(n):
                    for keep in combinations(range(n), r):
                        sub, _ = induced_subgraph(G, keep)
                        assert greedy_seo(sub) is not None

    def test_component_decomposition_n_le_4(self):
        for n in range(5):
            for G in enumerate_signed_graphs(n):
                parts_se = all(
                    greedy_seo(induced_subgraph(G, part)[0]) is not None
                    for part in connected_components(G)
                )
                assert parts_se == (greedy_seo(G) is not None)

    def test_single_sign_degeneration_n_le_4(self):
        for n in range(5):
            pairs = list(combinations(range(n), 2))
            for bits in range(1 << len(pairs)):
                G = build_graph(
                    n, [(u, v, PLUS) for i, (u, v) in enumerate(pairs) if bits >> i & 1]
                )
                chordal = chordality_check(sign_restriction(G, PLUS)).chordal
                assert (greedy_seo(G) is not None) == chordal
