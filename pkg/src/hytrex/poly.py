"""Exact integer polynomials and the invariants assembled from them.

``IntPoly`` is a dense univariate polynomial with arbitrary-precision
integer coefficients; ``IntPoly2`` is a sparse bivariate one.  On top of
them sit the interior polynomial (generating function of internal
inactivity over all hypertrees), the exterior polynomial (external
inactivity), a deletion-contraction Tutte oracle for ordinary multigraphs,
and the two specializations that tie the Tutte polynomial of a graph to the
invariants of its subdivision.
"""

from __future__ import annotations

from .errors import CapacityError, DisconnectedGraphError, GraphError
from .graph import (
    BipGraph,
    Hypergraph,
    abstract_dual,
    from_hypergraph,
    normalize_edge_order,
)
from .activity import external_active_flags, internal_active_flags
from .hypertrees import enumerate_hypertrees

__all__ = [
    "IntPoly",
    "IntPoly2",
    "MultiGraph",
    "interior_polynomial",
    "exterior_polynomial",
    "tutte_polynomial",
    "interior_from_tutte",
    "exterior_from_tutte",
    "subdivision",
    "is_interpolating",
]


class IntPoly:
    """Univariate polynomial with exact integer coefficients.

    Canonical form stores no trailing zeros; the zero polynomial is the
    empty vector and has no degree.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "IntPoly":
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        return cls([0] * exponent + [coefficient])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    def coeff(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return IntPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = IntPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({self.render()})"

    def render(self, var: str = "x") -> str:
        """Canonical ASCII form: ascending exponents, e.g. "1 + 2x + x^2"."""
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = var if mag == 1 else f"{mag}{var}"
            else:
                body = f"{var}^{k}" if mag == 1 else f"{mag}{var}^{k}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data) -> "IntPoly":
        if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
            raise GraphError("polynomial JSON must be a list of integers")
        return cls(data)


class IntPoly2:
    """Sparse bivariate polynomial: map (i, j) -> non-zero integer."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (i, j), c in dict(terms).items():
                c = int(c)
                if c:
                    clean[(int(i), int(j))] = c
        self.terms = dict(sorted(clean.items()))

    @classmethod
    def zero(cls) -> "IntPoly2":
        return cls()

    @classmethod
    def monomial(cls, i: int, j: int, coefficient: int = 1) -> "IntPoly2":
        return cls({(i, j): coefficient})

    def coeff(self, i: int, j: int) -> int:
        return self.terms.get((i, j), 0)

    def __add__(self, other):
        if not isinstance(other, IntPoly2):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return IntPoly2(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly2({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, IntPoly2):
            return NotImplemented
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return IntPoly2(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, IntPoly2):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __repr__(self):
        return f"IntPoly2({self.render()})"

    def render(self, var_x: str = "x", var_y: str = "y") -> str:
        """Terms by descending total degree, then descending x-degree."""
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda ij: (ij[0] + ij[1], ij[0]), reverse=True)
        parts = []
        for i, j in keys:
            c = self.terms[(i, j)]
            mag = abs(c)
            factors = []
            if i == 1:
                factors.append(var_x)
            elif i > 1:
                factors.append(f"{var_x}^{i}")
            if j == 1:
                factors.append(var_y)
            elif j > 1:
                factors.append(f"{var_y}^{j}")
            body = " ".join(factors) if factors else str(mag)
            if factors and mag != 1:
                body = f"{mag}{body}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json(self) -> list[list[int]]:
        return [[i, j, c] for (i, j), c in self.terms.items()]


def is_interpolating(p: IntPoly) -> bool:
    """True when the non-zero coefficients occupy a gap-free exponent range."""
    supp = p.support
    if not supp:
        return True
    return supp == tuple(range(supp[0], supp[-1] + 1))


# ---------------------------------------------------------------------------
# Interior and exterior polynomials of a bipartite graph.
# ---------------------------------------------------------------------------


def interior_polynomial(g: BipGraph, order=None, hypertrees=None) -> IntPoly:
    """Sum of x^(internal inactivity) over all hypertrees of ``g``."""
    if not g.connected:
        raise DisconnectedGraphError("the interior polynomial requires a connected graph")
    order = normalize_edge_order(g, order)
    b = hypertrees if hypertrees is not None else enumerate_hypertrees(g)
    coeffs = [0] * (g.n_e + 1)
    for f in b:
        flags = internal_active_flags(b, f, order)
        coeffs[len(flags) - sum(flags)] += 1
    return IntPoly(coeffs)


def exterior_polynomial(g: BipGraph, order=None, hyperedge_side: str = "e",
                        hypertrees=None) -> IntPoly:
    """Sum of y^(external inactivity) over all hypertrees, with the chosen
    colour class acting as the hyperedges."""
    if hyperedge_side not in ("v", "e"):
        raise GraphError("hyperedge_side must be 'v' or 'e'")
    if not g.connected:
        raise DisconnectedGraphError("the exterior polynomial requires a connected graph")
    if hyperedge_side == "v":
        g = abstract_dual(g)
    order = normalize_edge_order(g, order)
    b = hypertrees if hypertrees is not None else enumerate_hypertrees(g)
    coeffs = [0] * (g.n_e + 1)
    for f in b:
        flags = external_active_flags(b, f, order)
        coeffs[len(flags) - sum(flags)] += 1
    return IntPoly(coeffs)


# ---------------------------------------------------------------------------
# Ordinary multigraphs and the Tutte oracle.
# ---------------------------------------------------------------------------


class MultiGraph:
    """Ordinary multigraph on vertices 0..n-1; loops and parallel edges
    are allowed."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges):
        if n <= 0:
            raise GraphError("a multigraph needs at least one vertex")
        norm = []
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range")
            norm.append((u, v) if u <= v else (v, u))
        self.n = n
        self.edges = tuple(sorted(norm))

    @classmethod
    def path(cls, n_vertices: int) -> "MultiGraph":
        return cls(n_vertices, [(i, i + 1) for i in range(n_vertices - 1)])

    @classmethod
    def cycle(cls, n_vertices: int) -> "MultiGraph":
        return cls(n_vertices,
                   [(i, (i + 1) % n_vertices) for i in range(n_vertices)])

    @classmethod
    def complete(cls, n_vertices: int) -> "MultiGraph":
        return cls(n_vertices, [(i, j) for i in range(n_vertices)
                                for j in range(i + 1, n_vertices)])

    @classmethod
    def star(cls, leaves: int) -> "MultiGraph":
        return cls(leaves + 1, [(0, i + 1) for i in range(leaves)])

    @property
    def connected(self) -> bool:
        return _graph_components(self.n, self.edges) == 1

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"MultiGraph(n={self.n}, edges={list(self.edges)})"


def _graph_components(n, edges) -> int:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[rv] = ru
            comps -= 1
    return comps


def _bridge_indices(n, edges) -> set[int]:
    from collections import Counter

    multiplicity = Counter(edges)
    bridges = set()
    for idx, (u, v) in enumerate(edges):
        if u == v or multiplicity[(u, v)] > 1:
            continue
        rest = edges[:idx] + edges[idx + 1:]
        if _graph_components(n, rest) > _graph_components(n, edges):
            bridges.add(idx)
    return bridges


def _canonical_multigraph(n, edges):
    # Deterministic relabeling: the certificate is a relabeled copy, so equal
    # certificates always mean isomorphic graphs; refinement only improves
    # the memo hit rate.
    colors = [0] * n
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    colors = deg[:]
    for _ in range(3):
        sig = []
        for x in range(n):
            nbr = sorted(colors[u] if v == x else colors[v]
                         for u, v in edges if x in (u, v))
            sig.append((colors[x], tuple(nbr)))
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        colors = [palette[s] for s in sig]
    new_index = {old: pos for pos, (_, old) in
                 enumerate(sorted((colors[x], x) for x in range(n)))}
    relabeled = sorted(tuple(sorted((new_index[u], new_index[v]))) for u, v in edges)
    return (n, tuple(relabeled))


def tutte_polynomial(graph: MultiGraph, max_edges: int = 12) -> IntPoly2:
    """Deletion-contraction with bridge/loop base cases, memoized on a
    canonical relabeling of each intermediate graph."""
    if len(graph.edges) > max_edges:
        raise CapacityError(
            f"Tutte recursion capped at {max_edges} edges, got {len(graph.edges)}")
    memo = {}

    def rec(n, edges):
        if not edges:
            return IntPoly2.monomial(0, 0)
        key = _canonical_multigraph(n, edges)
        hit = memo.get(key)
        if hit is not None:
            return hit
        bridges = _bridge_indices(n, edges)
        pick = None
        for idx, (u, v) in enumerate(edges):
            if u != v and idx not in bridges:
                pick = idx
                break
        if pick is None:
            n_loops = sum(1 for u, v in edges if u == v)
            res = IntPoly2.monomial(len(edges) - n_loops, n_loops)
        else:
            u, v = edges[pick]
            deleted = edges[:pick] + edges[pick + 1:]
            contracted = []
            for i, (a, b) in enumerate(deleted):
                a2 = u if a == v else a
                b2 = u if b == v else b
                a2, b2 = (a2, b2) if a2 <= b2 else (b2, a2)
                contracted.append((a2, b2))
            res = rec(n, deleted) + rec(n, tuple(sorted(contracted)))
        memo[key] = res
        return res

    return rec(graph.n, graph.edges)


def subdivision(graph: MultiGraph) -> BipGraph:
    """Incidence bipartite graph of the multigraph viewed as a hypergraph:
    V carries the graph vertices, E one vertex per graph edge."""
    vertices = tuple(f"u{i}" for i in range(graph.n))
    hyperedges = tuple(frozenset({f"u{u}", f"u{v}"}) for u, v in graph.edges)
    return from_hypergraph(Hypergraph(vertices, hyperedges))


def interior_from_tutte(graph: MultiGraph, max_edges: int = 12) -> IntPoly:
    """x^(|V|-1) T(1/x, 1), computed by reindexing Tutte coefficients."""
    if not graph.connected:
        raise DisconnectedGraphError("the Tutte specialization requires a connected graph")
    t = tutte_polynomial(graph, max_edges=max_edges)
    rank = graph.n - 1
    coeffs = [0] * (rank + 1)
    for (i, j), c in t.terms.items():
        if i > rank:
            raise RuntimeError("internal error: Tutte x-degree exceeds the rank")
        coeffs[rank - i] += c
    return IntPoly(coeffs)


def exterior_from_tutte(graph: MultiGraph, max_edges: int = 12) -> IntPoly:
    """y^(|E|-|V|+1) T(1, 1/y), computed by reindexing Tutte coefficients."""
    if not graph.connected:
        raise DisconnectedGraphError("the Tutte specialization requires a connected graph")
    t = tutte_polynomial(graph, max_edges=max_edges)
    null = len(graph.edges) - graph.n + 1
    coeffs = [0] * (null + 1)
    for (i, j), c in t.terms.items():
        if j > null:
            raise RuntimeError("internal error: Tutte y-degree exceeds the nullity")
        coeffs[null - j] += c
    return IntPoly(coeffs)
