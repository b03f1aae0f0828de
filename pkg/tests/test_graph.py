"""Graph data model: construction, mu, duals, restrictions, JSON format."""

import json

import pytest
from hypothesis import given, settings

from conftest import complete_bipartite, connected_bipgraphs, cycle, path_graph
from hytrex.errors import GraphError
from hytrex.graph import (
    Hypergraph,
    abstract_dual,
    build_bipartite,
    component_count,
    edge_subset,
    from_hypergraph,
    graph_from_json,
    graph_to_json,
    mu,
    mu_table,
    nullity,
    restriction,
    to_hypergraph,
)


class TestBuild:
    def test_multi_edge_collapses(self):
        g = build_bipartite(["v1"], ["e1"], [("v1", "e1"), ("v1", "e1")])
        assert g.n_edges == 1

    def test_hexagon(self):
        g = cycle(3)
        assert (g.n_v, g.n_e, g.n_edges) == (3, 3, 6)
        assert all(g.deg_e(e) == 2 for e in range(3))
        assert all(g.deg_v(v) == 2 for v in range(3))
        assert g.connected

    def test_unknown_label_rejected(self):
        with pytest.raises(GraphError):
            build_bipartite(["v1"], ["e1"], [("x", "e1")])
        with pytest.raises(GraphError):
            build_bipartite(["v1"], ["e1"], [("v1", "x")])

    def test_empty_class_rejected(self):
        with pytest.raises(GraphError):
            build_bipartite([], ["e1"], [])
        with pytest.raises(GraphError):
            build_bipartite(["v1"], [], [])

    def test_duplicate_labels_rejected(self):
        with pytest.raises(GraphError):
            build_bipartite(["v1", "v1"], ["e1"], [])

    def test_connectivity_flag_matches_fresh_search(self):
        g = build_bipartite(["a", "b"], ["c", "d"], [("a", "c"), ("b", "d")])
        assert not g.connected
        assert component_count(g) == 2


class TestHypergraph:
    def test_single_hyperedge(self):
        g = from_hypergraph(Hypergraph.of(["a", "b"], [{"a", "b"}]))
        assert (g.n_v, g.n_e, g.n_edges) == (2, 1, 2)

    def test_multiset_members_stay_distinct(self):
        g = from_hypergraph(Hypergraph.of(["a", "b"], [{"a", "b"}, {"a", "b"}]))
        assert (g.n_v, g.n_e, g.n_edges) == (2, 2, 4)

    def test_triangle_becomes_hexagon(self):
        triangle = Hypergraph.of("abc", [{"a", "b"}, {"b", "c"}, {"a", "c"}])
        g = from_hypergraph(triangle)
        assert (g.n_v, g.n_e, g.n_edges) == (3, 3, 6)
        assert all(g.deg_e(e) == 2 for e in range(3))
        assert g.connected

    def test_empty_hyperedge_rejected(self):
        with pytest.raises(GraphError):
            Hypergraph.of(["a"], [set()])

    def test_round_trip_preserves_multiset(self):
        h = Hypergraph.of("abc", [{"a"}, {"a"}, {"b", "c"}])
        back = to_hypergraph(from_hypergraph(h))
        assert sorted(map(sorted, back.hyperedges)) == sorted(map(sorted, h.hyperedges))


class TestDual:
    def test_hexagon_self_dual_shape(self):
        g = cycle(3)
        d = abstract_dual(g)
        assert (d.n_v, d.n_e) == (3, 3)
        assert d.v_names == g.e_names

    def test_k23_swaps_sizes(self):
        d = abstract_dual(complete_bipartite(2, 3))
        assert (d.n_v, d.n_e) == (3, 2)

    def test_involution(self):
        for g in (cycle(3), complete_bipartite(2, 3), path_graph()):
            assert abstract_dual(abstract_dual(g)) == g

    @settings(max_examples=30, deadline=None)
    @given(connected_bipgraphs())
    def test_involution_preserves_edges_and_connectivity(self, g):
        d = abstract_dual(g)
        assert d.n_edges == g.n_edges
        assert d.connected == g.connected
        assert abstract_dual(d) == g


class TestRestriction:
    def test_single_hyperedge_of_hexagon(self):
        g = cycle(3)
        sub = restriction(g, edge_subset(g, ["e1"]))
        assert (sub.n_v, sub.n_e, sub.n_edges) == (2, 1, 2)
        assert component_count(sub) == 1

    def test_two_adjacent_hyperedges(self):
        g = cycle(3)
        sub = restriction(g, edge_subset(g, ["e1", "e2"]))
        assert sub.n_v == 3
        assert component_count(sub) == 1

    def test_full_restriction_is_whole_graph(self):
        g = complete_bipartite(2, 3)
        sub = restriction(g, edge_subset(g, g.e_names))
        assert sub == g

    def test_empty_restriction_rejected(self):
        with pytest.raises(GraphError):
            restriction(cycle(3), 0)


class TestMu:
    def test_empty_set_is_zero(self):
        assert mu(cycle(3), 0) == 0
        assert mu(complete_bipartite(2, 3), 0) == 0

    def test_hexagon_single(self):
        g = cycle(3)
        assert mu(g, edge_subset(g, ["e1"])) == 1

    def test_k23_full(self):
        g = complete_bipartite(2, 3)
        assert mu(g, (1 << g.n_e) - 1) == 1

    @settings(max_examples=30, deadline=None)
    @given(connected_bipgraphs())
    def test_bounded_and_monotone(self, g):
        table = mu_table(g)
        full = 1 << g.n_e
        for mask in range(full):
            union = 0
            for e in range(g.n_e):
                if mask >> e & 1:
                    union |= g.e_masks[e]
            assert table[mask] <= union.bit_count()
            # dropping any single element cannot increase mu
            for e in range(g.n_e):
                if mask >> e & 1:
                    assert table[mask ^ (1 << e)] <= table[mask]

    @settings(max_examples=25, deadline=None)
    @given(connected_bipgraphs(max_v=3, max_e=4))
    def test_submodular(self, g):
        table = mu_table(g)
        full = 1 << g.n_e
        for a in range(full):
            for b in range(full):
                assert table[a] + table[b] >= table[a | b] + table[a & b]

    def test_submodular_exhaustive_on_named_graphs(self):
        for g in (cycle(3), cycle(4), complete_bipartite(2, 3),
                  complete_bipartite(3, 3)):
            table = mu_table(g)
            full = 1 << g.n_e
            for a in range(full):
                for b in range(full):
                    assert table[a] + table[b] >= table[a | b] + table[a & b]


class TestNullity:
    def test_tree(self):
        assert nullity(path_graph()) == 0

    def test_hexagon(self):
        assert nullity(cycle(3)) == 1

    def test_k23(self):
        assert nullity(complete_bipartite(2, 3)) == 2


class TestJson:
    def test_round_trip_bit_exact(self):
        g = complete_bipartite(2, 3)
        data = graph_to_json(g)
        text = json.dumps(data)
        assert graph_from_json(json.loads(text)) == g
        assert json.dumps(graph_to_json(graph_from_json(data))) == text

    def test_unknown_keys_rejected(self):
        data = graph_to_json(cycle(2))
        data["extra"] = 1
        with pytest.raises(GraphError):
            graph_from_json(data)

    def test_missing_key_rejected(self):
        with pytest.raises(GraphError):
            graph_from_json({"v": ["a"], "e": ["b"]})

    def test_bad_adjacency_rejected(self):
        with pytest.raises(GraphError):
            graph_from_json({"v": ["a"], "e": ["b"], "adj": [["a", "b", "c"]]})
        with pytest.raises(GraphError):
            graph_from_json({"v": ["a"], "e": ["b"], "adj": [["a", "zzz"]]})
