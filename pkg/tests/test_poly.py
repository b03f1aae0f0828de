"""Polynomial arithmetic, the invariant pipeline, and the Tutte oracle."""

import random

import pytest
from hypothesis import given, settings

from conftest import complete_bipartite, connected_bipgraphs, cycle, path_graph
from hytrex.errors import CapacityError, DisconnectedGraphError
from hytrex.graph import BipGraph, abstract_dual
from hytrex.hypertrees import enumerate_hypertrees
from hytrex.poly import (
    IntPoly,
    IntPoly2,
    MultiGraph,
    exterior_from_tutte,
    exterior_polynomial,
    interior_from_tutte,
    interior_polynomial,
    is_interpolating,
    subdivision,
    tutte_polynomial,
)


class TestIntPoly:
    def test_canonical_form_trims_trailing_zeros(self):
        assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
        assert IntPoly([0, 0]).coeffs == ()

    def test_zero_has_no_degree(self):
        with pytest.raises(ValueError):
            IntPoly.zero().degree

    def test_arithmetic(self):
        p = IntPoly([1, 1])
        assert (p * p).coeffs == (1, 2, 1)
        assert (p + IntPoly([0, 0, 3])).coeffs == (1, 1, 3)
        assert (p - p).is_zero
        assert (2 * p).coeffs == (2, 2)
        assert (p ** 3).coeffs == (1, 3, 3, 1)
        assert p.shift(2).coeffs == (0, 0, 1, 1)

    def test_render(self):
        assert IntPoly([1, 1, 1]).render() == "1 + x + x^2"
        assert IntPoly([1, 2]).render("y") == "1 + 2y"
        assert IntPoly([0, -1, 3]).render() == "-x + 3x^2"
        assert IntPoly.zero().render() == "0"
        assert IntPoly([5]).render() == "5"

    def test_json_round_trip(self):
        p = IntPoly([1, 4, 1])
        assert IntPoly.from_json(p.to_json()) == p

    def test_is_interpolating(self):
        assert is_interpolating(IntPoly([1, 1, 1]))
        assert is_interpolating(IntPoly([0, 2, 5]))
        assert not is_interpolating(IntPoly([1, 0, 1]))
        assert is_interpolating(IntPoly.zero())


class TestIntPoly2:
    def test_arithmetic_and_render(self):
        x = IntPoly2.monomial(1, 0)
        y = IntPoly2.monomial(0, 1)
        t = x * x + x + y
        assert t.coeff(2, 0) == 1 and t.coeff(1, 0) == 1 and t.coeff(0, 1) == 1
        assert t.render() == "x^2 + x + y"
        assert (t * 0) == IntPoly2.zero()

    def test_json_sorted(self):
        t = IntPoly2({(2, 0): 1, (0, 1): 1, (1, 0): 1})
        assert t.to_json() == [[0, 1, 1], [1, 0, 1], [2, 0, 1]]


class TestPipeline:
    def test_hexagon(self):
        g = cycle(3)
        assert interior_polynomial(g) == IntPoly([1, 1, 1])
        assert exterior_polynomial(g) == IntPoly([1, 2])

    def test_k23(self):
        g = complete_bipartite(2, 3)
        assert interior_polynomial(g) == IntPoly([1, 2])
        assert exterior_polynomial(g) == IntPoly([1, 1, 1])
        # the other class as hyperedges gives a different exterior polynomial
        assert exterior_polynomial(g, hyperedge_side="v") == IntPoly([1, 2])

    def test_k33_derived(self):
        g = complete_bipartite(3, 3)
        assert interior_polynomial(g) == IntPoly([1, 4, 1])
        assert exterior_polynomial(g) == IntPoly([1, 2, 3])

    def test_tree_is_one(self):
        assert interior_polynomial(path_graph()) == IntPoly.one()
        assert exterior_polynomial(path_graph()) == IntPoly.one()

    def test_disconnected_rejected(self):
        g = BipGraph(("a", "b"), ("c", "d"), [(0, 0), (1, 1)])
        with pytest.raises(DisconnectedGraphError):
            interior_polynomial(g)
        with pytest.raises(DisconnectedGraphError):
            exterior_polynomial(g)

    def test_order_invariance_20_random_orders(self):
        rng = random.Random(20260808)
        for g in (cycle(4), complete_bipartite(2, 4), complete_bipartite(3, 3)):
            b = enumerate_hypertrees(g)
            base_i = interior_polynomial(g, hypertrees=b)
            base_x = exterior_polynomial(g, hypertrees=b)
            for _ in range(20):
                order = list(range(g.n_e))
                rng.shuffle(order)
                assert interior_polynomial(g, order=order, hypertrees=b) == base_i
                assert exterior_polynomial(g, order=order, hypertrees=b) == base_x

    @settings(max_examples=25, deadline=None)
    @given(connected_bipgraphs())
    def test_dual_invariance_and_coefficient_sum(self, g):
        b = enumerate_hypertrees(g)
        interior = interior_polynomial(g, hypertrees=b)
        exterior = exterior_polynomial(g, hypertrees=b)
        assert interior == interior_polynomial(abstract_dual(g))
        assert sum(interior.coeffs) == len(b)
        assert sum(exterior.coeffs) == len(b)


class TestTutte:
    def test_single_edge_is_x(self):
        assert tutte_polynomial(MultiGraph(2, [(0, 1)])) == IntPoly2.monomial(1, 0)

    def test_single_loop_is_y(self):
        assert tutte_polynomial(MultiGraph(1, [(0, 0)])) == IntPoly2.monomial(0, 1)

    def test_triangle_by_hand(self):
        t = tutte_polynomial(MultiGraph.cycle(3))
        assert t == IntPoly2({(2, 0): 1, (1, 0): 1, (0, 1): 1})

    def test_k4_known_value(self):
        t = tutte_polynomial(MultiGraph.complete(4))
        assert t == IntPoly2({(3, 0): 1, (2, 0): 3, (1, 0): 2, (1, 1): 4,
                              (0, 1): 2, (0, 2): 3, (0, 3): 1})

    def test_paths_are_powers_of_x(self):
        for k in range(2, 6):
            assert tutte_polynomial(MultiGraph.path(k)) == IntPoly2.monomial(k - 1, 0)

    def test_parallel_edges(self):
        # two parallel edges: T = x + y
        t = tutte_polynomial(MultiGraph(2, [(0, 1), (0, 1)]))
        assert t == IntPoly2({(1, 0): 1, (0, 1): 1})

    def test_capacity(self):
        with pytest.raises(CapacityError):
            tutte_polynomial(MultiGraph.complete(6))  # 15 edges


class TestSpecializations:
    def test_triangle(self):
        tri = MultiGraph.cycle(3)
        assert interior_from_tutte(tri) == IntPoly([1, 1, 1])
        assert exterior_from_tutte(tri) == IntPoly([1, 2])

    def test_trees_give_one(self):
        for k in range(2, 7):
            assert interior_from_tutte(MultiGraph.path(k)) == IntPoly.one()
            assert exterior_from_tutte(MultiGraph.path(k)) == IntPoly.one()

    def test_disconnected_rejected(self):
        g = MultiGraph(4, [(0, 1), (2, 3)])
        with pytest.raises(DisconnectedGraphError):
            interior_from_tutte(g)

    @pytest.mark.parametrize("mg", [
        MultiGraph.cycle(3),
        MultiGraph.cycle(4),
        MultiGraph.cycle(5),
        MultiGraph.complete(4),
        MultiGraph.path(5),
        MultiGraph.star(4),
        MultiGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
    ])
    def test_subdivision_pipeline_matches_oracle(self, mg):
        bip = subdivision(mg)
        assert interior_polynomial(bip) == interior_from_tutte(mg)
        assert exterior_polynomial(bip) == exterior_from_tutte(mg)

    def test_subdivision_handles_multi_edges_and_loops(self):
        # a loop subdivides to a pendant; a doubled edge to two parallel paths
        mg = MultiGraph(2, [(0, 1), (0, 1), (1, 1)])
        bip = subdivision(mg)
        assert (bip.n_v, bip.n_e) == (2, 3)
        assert interior_polynomial(bip) == interior_from_tutte(mg)
        assert exterior_polynomial(bip) == exterior_from_tutte(mg)
