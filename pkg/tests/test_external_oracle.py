"""Cross-check the hypertree set against a foreign implementation.

networkx enumerates spanning trees with its own partition-based iterator;
collecting the hyperedge degree vectors of every spanning tree gives the
hypertree set by definition, with none of this package's code on the path.
"""

import networkx as nx
import pytest
from networkx.algorithms.tree import SpanningTreeIterator

from conftest import complete_bipartite, cycle, ladder
from hytrex.families import FamilySpec, generate
from hytrex.hypertrees import enumerate_hypertrees
from hytrex.verify import random_connected_bipartite


def hypertrees_via_networkx(g):
    nxg = nx.Graph()
    nxg.add_nodes_from(("v", i) for i in range(g.n_v))
    nxg.add_nodes_from(("e", j) for j in range(g.n_e))
    nxg.add_edges_from((("v", v), ("e", e)) for v, e in g.adj)
    vectors = set()
    for tree in SpanningTreeIterator(nxg):
        vectors.add(tuple(tree.degree(("e", j)) - 1 for j in range(g.n_e)))
    return sorted(vectors)


@pytest.mark.parametrize("g", [
    cycle(3),
    cycle(5),
    complete_bipartite(2, 3),
    complete_bipartite(3, 3),
    ladder(2),
    ladder(3),
    generate(FamilySpec("kmn_minus_matching", (3, 4, 2))),
    generate(FamilySpec("ear_graph", (2, 2), seed=0)),
], ids=lambda g: f"{g.n_v}x{g.n_e}e{g.n_edges}")
def test_named_graphs(g):
    assert list(enumerate_hypertrees(g)) == hypertrees_via_networkx(g)


def test_seeded_random_graphs():
    for g in random_connected_bipartite(count=12, max_total=9, seed=42):
        assert list(enumerate_hypertrees(g)) == hypertrees_via_networkx(g)
