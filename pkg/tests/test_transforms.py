"""Graph surgeries and the polynomial identities they support."""

import pytest
from hypothesis import given, settings

from conftest import complete_bipartite, connected_bipgraphs, cycle, path_graph
from hytrex.errors import GraphError
from hytrex.graph import BipGraph, build_bipartite
from hytrex.poly import IntPoly, exterior_polynomial, interior_polynomial
from hytrex.transforms import (
    add_parallel_pair_vertices,
    balanced_decomposition,
    contract_vertex,
    delete_valence1,
    delete_vertex,
    edge_join,
    identify_pair,
    one_point_join,
)


class TestPendantRemoval:
    def test_short_path(self):
        g = BipGraph(("v1", "v2"), ("e1",), [(0, 0), (1, 0)])
        out = delete_valence1(g, "v2")
        assert (out.n_v, out.n_e, out.n_edges) == (1, 1, 1)

    def test_pendant_on_hexagon(self):
        g = cycle(3)
        with_pendant = build_bipartite(
            list(g.v_names) + ["w"], g.e_names,
            [(g.v_names[v], g.e_names[e]) for v, e in sorted(g.adj)] + [("w", "e1")])
        assert delete_valence1(with_pendant, "w") == g

    def test_wrong_degree_rejected(self):
        with pytest.raises(GraphError):
            delete_valence1(cycle(3), "v1")

    def test_emptying_a_class_rejected(self):
        g = path_graph()
        with pytest.raises(GraphError):
            delete_valence1(delete_valence1(g, "v2"), "v1")


class TestDeleteContract:
    def test_hexagon_contract(self):
        out = contract_vertex(cycle(3), "e1")
        assert (out.n_v, out.n_e, out.n_edges) == (2, 2, 4)
        assert sorted(out.v_names) == ["v1+v2", "v3"]

    def test_hexagon_delete(self):
        out = delete_vertex(cycle(3), "e1")
        assert (out.n_v, out.n_e, out.n_edges) == (3, 2, 4)
        degrees = sorted(out.deg_v(v) for v in range(out.n_v))
        assert degrees == [1, 1, 2]

    def test_contract_isolated_rejected(self):
        g = build_bipartite(["a"], ["b", "c"], [("a", "b")])
        with pytest.raises(GraphError):
            contract_vertex(g, "c")

    def test_hexagon_recursion_by_hand(self):
        # interior of the hexagon = interior of the path + x * interior of
        # the 4-cycle = 1 + x(1 + x)
        g = cycle(3)
        i_deleted = interior_polynomial(delete_vertex(g, "e1"))
        i_contracted = interior_polynomial(contract_vertex(g, "e1"))
        assert i_deleted == IntPoly.one()
        assert i_contracted == IntPoly([1, 1])
        assert i_deleted + i_contracted.shift(1) == interior_polynomial(g)

    @settings(max_examples=25, deadline=None)
    @given(connected_bipgraphs())
    def test_valence2_recursions(self, g):
        interior_g = interior_polynomial(g)
        exterior_g = exterior_polynomial(g)
        for side, names in (("v", g.v_names), ("e", g.e_names)):
            for idx, label in enumerate(names):
                degree = g.deg_v(idx) if side == "v" else g.deg_e(idx)
                if degree != 2 or (g.n_v if side == "v" else g.n_e) < 2:
                    continue
                deleted = delete_vertex(g, label)
                if not deleted.connected:
                    continue
                contracted = contract_vertex(g, label)
                assert interior_polynomial(deleted) \
                    + interior_polynomial(contracted).shift(1) == interior_g
                if side == "e":
                    assert exterior_polynomial(deleted).shift(1) \
                        + exterior_polynomial(contracted) == exterior_g

    @settings(max_examples=25, deadline=None)
    @given(connected_bipgraphs(max_v=3, max_e=3))
    def test_pendant_insensitivity(self, g):
        grown = build_bipartite(
            list(g.v_names) + ["w"], g.e_names,
            [(g.v_names[v], g.e_names[e]) for v, e in sorted(g.adj)]
            + [("w", g.e_names[0])])
        assert interior_polynomial(grown) == interior_polynomial(g)
        assert exterior_polynomial(grown) == exterior_polynomial(g)


class TestJoins:
    def test_hexagon_wedge_squares_interior(self):
        g = one_point_join(cycle(3), cycle(3), "e1", "e1")
        assert interior_polynomial(g) == IntPoly([1, 1, 1]) ** 2
        assert exterior_polynomial(g) == IntPoly([1, 2]) ** 2

    def test_edge_join_of_two_squares(self):
        g = edge_join(cycle(2), cycle(2), ("v1", "e1"), ("v1", "e1"))
        assert interior_polynomial(g) == IntPoly([1, 2, 1])

    def test_class_mismatch_rejected(self):
        with pytest.raises(GraphError):
            one_point_join(cycle(3), cycle(3), "v1", "e1")

    def test_non_edge_rejected(self):
        g = cycle(3)
        with pytest.raises(GraphError):
            edge_join(g, cycle(3), ("v1", "e2"), ("v1", "e1"))

    @settings(max_examples=15, deadline=None)
    @given(connected_bipgraphs(max_v=3, max_e=3), connected_bipgraphs(max_v=3, max_e=3))
    def test_join_multiplicativity(self, g1, g2):
        i1, x1 = interior_polynomial(g1), exterior_polynomial(g1)
        i2, x2 = interior_polynomial(g2), exterior_polynomial(g2)
        joined = one_point_join(g1, g2, g1.v_names[0], g2.v_names[0])
        assert interior_polynomial(joined) == i1 * i2
        assert exterior_polynomial(joined) == x1 * x2
        joined_e = one_point_join(g1, g2, g1.e_names[0], g2.e_names[0])
        assert interior_polynomial(joined_e) == i1 * i2
        assert exterior_polynomial(joined_e) == x1 * x2


class TestParallelPair:
    def test_construction_shape(self):
        g = add_parallel_pair_vertices(cycle(3), "e1", "e2", 1)
        assert (g.n_v, g.n_e) == (4, 3)
        new = g.v_index("p1")
        assert g.deg_v(new) == 2

    def test_identify_pair_shape(self):
        out = identify_pair(cycle(3), "e1", "e2")
        assert (out.n_v, out.n_e, out.n_edges) == (3, 2, 5)
        degrees = sorted([out.deg_v(v) for v in range(3)]
                         + [out.deg_e(e) for e in range(2)])
        assert degrees == [1, 2, 2, 2, 3]

    def test_same_edge_rejected(self):
        with pytest.raises(GraphError):
            add_parallel_pair_vertices(cycle(3), "e1", "e1", 1)
        with pytest.raises(GraphError):
            identify_pair(cycle(3), "e1", "e1")

    def test_hexagon_identity(self):
        g = cycle(3)
        interior_g = interior_polynomial(g)
        quotient = identify_pair(g, "e1", "e2")
        for t in (1, 2, 3):
            extended = add_parallel_pair_vertices(g, "e1", "e2", t)
            assert interior_polynomial(extended) \
                - (t * interior_polynomial(quotient)).shift(1) == interior_g

    def test_quadratic_coefficients_match_for_equivalent_pairs(self):
        # pairs with the same number of common neighbours produce the same
        # quadratic coefficient after the same parallel-pair extension
        for g in (cycle(3), complete_bipartite(2, 3), complete_bipartite(3, 3)):
            for m_new in (1, 2):
                seen = {}
                for a in range(g.n_e):
                    for b in range(a + 1, g.n_e):
                        common = (g.e_masks[a] & g.e_masks[b]).bit_count()
                        extended = add_parallel_pair_vertices(
                            g, g.e_names[a], g.e_names[b], m_new)
                        quad = interior_polynomial(extended).coeff(2)
                        if (m_new, common) in seen:
                            assert seen[(m_new, common)] == quad
                        else:
                            seen[(m_new, common)] = quad


class TestBalancedDecomposition:
    def test_balanced_graph_is_single_term(self):
        g = cycle(3)
        terms = balanced_decomposition(g)
        assert len(terms) == 1
        assert terms[0].coefficient == 1
        assert terms[0].exponent == 0
        assert terms[0].graph == g

    def test_k23_two_terms_identity(self):
        g = complete_bipartite(2, 3)
        terms = balanced_decomposition(g)
        assert len(terms) == 2
        total = IntPoly.zero()
        for term in terms:
            assert term.graph.n_v == term.graph.n_e
            total = total + (term.coefficient
                             * interior_polynomial(term.graph)).shift(term.exponent)
        assert total == interior_polynomial(g)

    def test_wrong_orientation_rejected(self):
        with pytest.raises(GraphError):
            balanced_decomposition(complete_bipartite(2, 3).__class__(
                ("a", "b", "c"), ("d",), [(0, 0), (1, 0), (2, 0)]))

    @settings(max_examples=20, deadline=None)
    @given(connected_bipgraphs(max_v=3, max_e=4))
    def test_reassembly(self, g):
        if g.n_v > g.n_e:
            return
        total = IntPoly.zero()
        for term in balanced_decomposition(g):
            assert term.graph.n_v == term.graph.n_e
            total = total + (term.coefficient
                             * interior_polynomial(term.graph)).shift(term.exponent)
        assert total == interior_polynomial(g)
