"""Bipartite-graph and hypergraph data model.

A :class:`BipGraph` has two colour classes, ``V`` and ``E``.  The ``E`` class
doubles as the hyperedge set of the hypergraph induced by the graph, so the
structural quantities defined here (the submodular rank ``mu``, nullity,
restrictions, abstract duals) are all relative to that split.  Instances are
immutable after construction and safe to share between threads.

Subsets of the ``E`` class travel as integer bitmasks: bit ``i`` stands for
the hyperedge with index ``i``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import CapacityError, GraphError

__all__ = [
    "BipGraph",
    "Hypergraph",
    "build_bipartite",
    "from_hypergraph",
    "to_hypergraph",
    "abstract_dual",
    "restriction",
    "edge_subset",
    "labels_of_subset",
    "mu",
    "mu_table",
    "subgraph_components",
    "component_count",
    "nullity",
    "normalize_edge_order",
    "graph_to_json",
    "graph_from_json",
    "subset_cap",
]


def subset_cap() -> int:
    """Cap on |E| for whole-powerset scans; HYTREX_MAX_E overrides it."""
    return int(os.environ.get("HYTREX_MAX_E", "24"))


def _require_subset_capacity(n_e: int) -> None:
    cap = subset_cap()
    if n_e > cap:
        raise CapacityError(
            f"subset enumeration over {n_e} hyperedges exceeds the cap of {cap}"
        )


def bits_of(mask: int):
    """Yield the indices of the set bits of ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Hypergraph:
    """Vertex labels plus a multiset of non-empty hyperedges (label sets)."""

    vertices: tuple[str, ...]
    hyperedges: tuple[frozenset[str], ...]

    def __post_init__(self):
        known = set(self.vertices)
        if len(known) != len(self.vertices):
            raise GraphError("duplicate vertex label in hypergraph")
        for h in self.hyperedges:
            if not h:
                raise GraphError("empty hyperedge")
            unknown = h - known
            if unknown:
                raise GraphError(f"hyperedge uses unknown vertex {sorted(unknown)[0]!r}")

    @staticmethod
    def of(vertices, hyperedges) -> "Hypergraph":
        return Hypergraph(tuple(vertices), tuple(frozenset(h) for h in hyperedges))


class BipGraph:
    """Simple bipartite graph with distinguished colour classes V and E.

    ``adj`` is a frozenset of (v-index, e-index) pairs.  Construction
    validates indices, collapses duplicate pairs and records whether the
    graph is connected.
    """

    __slots__ = (
        "v_names", "e_names", "adj", "connected",
        "v_nbrs", "e_nbrs", "v_masks", "e_masks",
        "_v_index", "_e_index", "_hash", "_mu_table",
    )

    def __init__(self, v_names, e_names, adj):
        v_names = tuple(v_names)
        e_names = tuple(e_names)
        if not v_names or not e_names:
            raise GraphError("both colour classes must be non-empty")
        for name in v_names + e_names:
            if not isinstance(name, str):
                raise GraphError(f"labels must be strings, got {name!r}")
        if len(set(v_names)) != len(v_names):
            raise GraphError("duplicate label in the V class")
        if len(set(e_names)) != len(e_names):
            raise GraphError("duplicate label in the E class")
        self.v_names = v_names
        self.e_names = e_names

        pairs = set()
        for v, e in adj:
            if not (0 <= v < len(v_names) and 0 <= e < len(e_names)):
                raise GraphError(f"adjacency pair ({v}, {e}) out of range")
            pairs.add((int(v), int(e)))
        self.adj = frozenset(pairs)

        v_nbrs = [[] for _ in v_names]
        e_nbrs = [[] for _ in e_names]
        for v, e in sorted(pairs):
            v_nbrs[v].append(e)
            e_nbrs[e].append(v)
        self.v_nbrs = tuple(tuple(x) for x in v_nbrs)
        self.e_nbrs = tuple(tuple(x) for x in e_nbrs)
        self.v_masks = tuple(sum(1 << e for e in nbrs) for nbrs in self.v_nbrs)
        self.e_masks = tuple(sum(1 << v for v in nbrs) for nbrs in self.e_nbrs)
        self._v_index = {name: i for i, name in enumerate(v_names)}
        self._e_index = {name: i for i, name in enumerate(e_names)}
        self.connected = component_count(self) == 1
        self._hash = hash((self.v_names, self.e_names, self.adj))
        self._mu_table = None

    @property
    def n_v(self) -> int:
        return len(self.v_names)

    @property
    def n_e(self) -> int:
        return len(self.e_names)

    @property
    def n_edges(self) -> int:
        return len(self.adj)

    def deg_v(self, v: int) -> int:
        return len(self.v_nbrs[v])

    def deg_e(self, e: int) -> int:
        return len(self.e_nbrs[e])

    def v_index(self, label: str) -> int:
        try:
            return self._v_index[label]
        except KeyError:
            raise GraphError(f"unknown V label {label!r}") from None

    def e_index(self, label: str) -> int:
        try:
            return self._e_index[label]
        except KeyError:
            raise GraphError(f"unknown E label {label!r}") from None

    def __eq__(self, other):
        if not isinstance(other, BipGraph):
            return NotImplemented
        return (self.v_names == other.v_names
                and self.e_names == other.e_names
                and self.adj == other.adj)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return (f"BipGraph(|V|={self.n_v}, |E|={self.n_e}, "
                f"edges={self.n_edges}, connected={self.connected})")


def build_bipartite(v_names, e_names, adj_pairs) -> BipGraph:
    """Build a graph from label pairs; duplicate pairs collapse to one edge."""
    g = BipGraph(v_names, e_names, [])
    pairs = set()
    for v_label, e_label in adj_pairs:
        pairs.add((g.v_index(v_label), g.e_index(e_label)))
    return BipGraph(v_names, e_names, pairs)


def from_hypergraph(h: Hypergraph) -> BipGraph:
    """Incidence bipartite graph of ``h``.

    Every multiset member becomes its own E-vertex, even when two hyperedges
    are equal as sets, so multiplicities survive the translation.
    """
    if not h.vertices or not h.hyperedges:
        raise GraphError("hypergraph must have at least one vertex and one hyperedge")
    v_names = h.vertices
    e_names = tuple(f"h{i}" for i in range(len(h.hyperedges)))
    v_index = {name: i for i, name in enumerate(v_names)}
    pairs = set()
    for i, hyperedge in enumerate(h.hyperedges):
        for label in hyperedge:
            pairs.add((v_index[label], i))
    return BipGraph(v_names, e_names, pairs)


def to_hypergraph(g: BipGraph) -> Hypergraph:
    """Read the E class back as a multiset of hyperedges over the V labels."""
    hyperedges = tuple(frozenset(g.v_names[v] for v in g.e_nbrs[e]) for e in range(g.n_e))
    for e, h in enumerate(hyperedges):
        if not h:
            raise GraphError(f"hyperedge {g.e_names[e]!r} is empty")
    return Hypergraph(g.v_names, hyperedges)


def abstract_dual(g: BipGraph) -> BipGraph:
    """Swap the roles of the two colour classes."""
    return BipGraph(g.e_names, g.v_names, [(e, v) for (v, e) in g.adj])


def edge_subset(g: BipGraph, labels) -> int:
    """Bitmask for the given E labels."""
    mask = 0
    for label in labels:
        mask |= 1 << g.e_index(label)
    return mask


def labels_of_subset(g: BipGraph, subset: int) -> tuple[str, ...]:
    return tuple(g.e_names[e] for e in bits_of(subset))


def restriction(g: BipGraph, subset: int) -> BipGraph:
    """Subgraph formed by the hyperedges in ``subset``, their incident edges
    and the V-vertices they touch."""
    if subset == 0:
        raise GraphError("restriction to the empty hyperedge set")
    _check_subset(g, subset)
    e_keep = list(bits_of(subset))
    v_union = 0
    for e in e_keep:
        v_union |= g.e_masks[e]
    v_keep = list(bits_of(v_union))
    if not v_keep:
        raise GraphError("restriction has no V-vertices")
    v_pos = {v: i for i, v in enumerate(v_keep)}
    e_pos = {e: i for i, e in enumerate(e_keep)}
    pairs = [(v_pos[v], e_pos[e]) for (v, e) in g.adj if e in e_pos]
    return BipGraph(
        tuple(g.v_names[v] for v in v_keep),
        tuple(g.e_names[e] for e in e_keep),
        pairs,
    )


def _check_subset(g: BipGraph, subset: int) -> None:
    if subset < 0 or subset >= (1 << g.n_e):
        raise GraphError(f"subset mask {subset} out of range for |E|={g.n_e}")


def subgraph_components(g: BipGraph, subset: int) -> int:
    """Number of connected components of the restriction to ``subset``."""
    _check_subset(g, subset)
    remaining = subset
    comps = 0
    while remaining:
        comps += 1
        low = remaining & -remaining
        comp_v = g.e_masks[low.bit_length() - 1]
        remaining ^= low
        grown = True
        while grown:
            grown = False
            scan = remaining
            while scan:
                b = scan & -scan
                scan ^= b
                e = b.bit_length() - 1
                if g.e_masks[e] & comp_v:
                    comp_v |= g.e_masks[e]
                    remaining ^= b
                    grown = True
    return comps


def mu(g: BipGraph, subset: int) -> int:
    """Submodular rank of a hyperedge set: |union| - #components, 0 for the
    empty set."""
    if subset == 0:
        return 0
    _check_subset(g, subset)
    union = 0
    for e in bits_of(subset):
        union |= g.e_masks[e]
    return union.bit_count() - subgraph_components(g, subset)


def mu_table(g: BipGraph) -> tuple[int, ...]:
    """``mu`` for every subset mask, computed once per graph and cached."""
    if g._mu_table is None:
        _require_subset_capacity(g.n_e)
        size = 1 << g.n_e
        union = [0] * size
        table = [0] * size
        for mask in range(1, size):
            low = mask & -mask
            union[mask] = union[mask ^ low] | g.e_masks[low.bit_length() - 1]
            table[mask] = union[mask].bit_count() - subgraph_components(g, mask)
        g._mu_table = tuple(table)
    return g._mu_table


def component_count(g: BipGraph) -> int:
    """Connected components of the whole graph (isolated vertices count)."""
    n = g.n_v + g.n_e
    seen = [False] * n
    comps = 0
    for start in range(n):
        if seen[start]:
            continue
        comps += 1
        stack = [start]
        seen[start] = True
        while stack:
            node = stack.pop()
            if node < g.n_v:
                nbrs = (g.n_v + e for e in g.v_nbrs[node])
            else:
                nbrs = iter(g.e_nbrs[node - g.n_v])
            for nxt in nbrs:
                if not seen[nxt]:
                    seen[nxt] = True
                    stack.append(nxt)
    return comps


def nullity(g: BipGraph) -> int:
    """Cycle-space dimension: edges - vertices + components."""
    return g.n_edges - (g.n_v + g.n_e) + component_count(g)


def normalize_edge_order(g: BipGraph, order=None) -> tuple[int, ...]:
    """Validate an order on E (a permutation of indices, smallest first)."""
    if order is None:
        return tuple(range(g.n_e))
    order = tuple(int(x) for x in order)
    if sorted(order) != list(range(g.n_e)):
        raise GraphError("order must be a permutation of all E indices")
    return order


def graph_to_json(g: BipGraph) -> dict:
    """Wire format: {"v": [...], "e": [...], "adj": [[v-label, e-label], ...]}."""
    return {
        "v": list(g.v_names),
        "e": list(g.e_names),
        "adj": [[g.v_names[v], g.e_names[e]] for (v, e) in sorted(g.adj)],
    }


def graph_from_json(data) -> BipGraph:
    """Parse the wire format; unknown keys are rejected."""
    if not isinstance(data, dict):
        raise GraphError("graph JSON must be an object")
    extra = set(data) - {"v", "e", "adj"}
    if extra:
        raise GraphError(f"unknown key {sorted(extra)[0]!r} in graph JSON")
    for key in ("v", "e", "adj"):
        if key not in data:
            raise GraphError(f"graph JSON is missing key {key!r}")
    v_names, e_names, adj = data["v"], data["e"], data["adj"]
    if not isinstance(v_names, list) or not isinstance(e_names, list):
        raise GraphError("'v' and 'e' must be lists of labels")
    pairs = []
    if not isinstance(adj, list):
        raise GraphError("'adj' must be a list of [v-label, e-label] pairs")
    for item in adj:
        if not (isinstance(item, list) and len(item) == 2):
            raise GraphError(f"bad adjacency entry {item!r}")
        pairs.append((item[0], item[1]))
    return build_bipartite(v_names, e_names, pairs)
