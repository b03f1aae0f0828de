"""Generators for named bipartite families and their closed-form polynomials.

The closed forms are evaluated literally with exact binomials, so they act
as oracles that are independent of the hypertree pipeline:

* tree: interior = exterior = 1
* cycle of length 2n: interior = 1 + x + ... + x^(n-1), exterior = 1 + (n-1)y
* unicyclic with cycle length 2n: same as the cycle
* ladder (path of length n times an edge): (1 + x)^n and (1 + y)^n
* complete bipartite K_{m,n}: sum C(n-1,i) C(m-1,i) x^i and
  sum C(m+i-2,i) y^i with the n-side as hyperedges
* K_{m,n} minus a q-edge matching: the same sums with the linear
  (respectively top) coefficient reduced by q

Ear graphs (an even cycle grown by odd class-crossing ears) have no stated
closed form; they exist to exercise the monic top coefficient property.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import ClosedFormUnavailable, GraphError
from .graph import BipGraph, build_bipartite
from .poly import IntPoly

__all__ = [
    "FamilySpec",
    "FAMILY_TAGS",
    "generate",
    "closed_form_interior",
    "closed_form_exterior",
    "ear_decomposition",
    "spec_from_cli",
]

FAMILY_TAGS = (
    "tree",
    "cycle",
    "unicyclic",
    "ladder",
    "complete_bipartite",
    "kmn_minus_matching",
    "ear_graph",
)

_PARAM_COUNT = {
    "tree": 1,
    "cycle": 1,
    "unicyclic": 2,
    "ladder": 1,
    "complete_bipartite": 2,
    "kmn_minus_matching": 3,
    "ear_graph": 2,
}


@dataclass(frozen=True)
class FamilySpec:
    """A family tag with integer parameters and an optional seed."""

    tag: str
    params: tuple[int, ...]
    seed: int | None = None

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise GraphError(f"unknown family {self.tag!r}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        if len(self.params) != _PARAM_COUNT[self.tag]:
            raise GraphError(
                f"family {self.tag!r} takes {_PARAM_COUNT[self.tag]} parameters, "
                f"got {len(self.params)}")
        _validate(self.tag, self.params)

    def rng(self) -> random.Random:
        return random.Random(0 if self.seed is None else self.seed)


def _validate(tag: str, params: tuple[int, ...]) -> None:
    if tag == "tree":
        if params[0] < 2:
            raise GraphError("a tree needs at least 2 vertices")
    elif tag == "cycle":
        if params[0] < 2:
            raise GraphError("cycle parameter n (half the length) must be at least 2")
    elif tag == "unicyclic":
        n, extra = params
        if n < 2 or extra < 0:
            raise GraphError("unicyclic needs cycle parameter >= 2 and extra >= 0")
    elif tag == "ladder":
        if params[0] < 1:
            raise GraphError("ladder parameter n must be at least 1")
    elif tag == "complete_bipartite":
        m, n = params
        if not 1 <= m <= n:
            raise GraphError("complete_bipartite needs 1 <= m <= n")
    elif tag == "kmn_minus_matching":
        m, n, q = params
        if not (1 <= m <= n and 0 <= q <= m):
            raise GraphError("kmn_minus_matching needs 1 <= m <= n and 0 <= q <= m")
    elif tag == "ear_graph":
        k, ears = params
        if k < 2 or ears < 0:
            raise GraphError("ear_graph needs cycle parameter >= 2 and ears >= 0")


def spec_from_cli(tag: str, params, seed=None) -> FamilySpec:
    try:
        values = tuple(int(p) for p in params)
    except (TypeError, ValueError):
        raise GraphError(f"family parameters must be integers, got {params!r}") from None
    return FamilySpec(tag, values, seed)


def _binom(a: int, b: int) -> int:
    # Combinatorial convention: choosing nothing always counts once, and a
    # negative pool offers nothing else.
    if b == 0:
        return 1
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def generate(spec: FamilySpec) -> BipGraph:
    """The named graph; same spec and seed always give the same labels."""
    if spec.tag == "tree":
        return _tree(spec.params[0], spec.rng())
    if spec.tag == "cycle":
        return _cycle(spec.params[0])
    if spec.tag == "unicyclic":
        return _unicyclic(spec.params[0], spec.params[1], spec.rng())
    if spec.tag == "ladder":
        return _ladder(spec.params[0])
    if spec.tag == "complete_bipartite":
        return _complete_bipartite(*spec.params)
    if spec.tag == "kmn_minus_matching":
        return _kmn_minus_matching(*spec.params)
    if spec.tag == "ear_graph":
        return _ear_graph(spec.params[0], spec.params[1], spec.rng())[0]
    raise GraphError(f"unknown family {spec.tag!r}")


def _cycle(n: int) -> BipGraph:
    v_names = [f"v{i + 1}" for i in range(n)]
    e_names = [f"e{i + 1}" for i in range(n)]
    adj = []
    for i in range(n):
        adj.append((v_names[i], e_names[i]))
        adj.append((v_names[(i + 1) % n], e_names[i]))
    return build_bipartite(v_names, e_names, adj)


def _tree(n: int, rng: random.Random) -> BipGraph:
    # Random recursive tree; the colour of a vertex is its depth parity.
    parents = [None] + [rng.randrange(i) for i in range(1, n)]
    depth = [0] * n
    for i in range(1, n):
        depth[i] = depth[parents[i]] + 1
    v_ids = [i for i in range(n) if depth[i] % 2 == 0]
    e_ids = [i for i in range(n) if depth[i] % 2 == 1]
    v_label = {i: f"v{k + 1}" for k, i in enumerate(v_ids)}
    e_label = {i: f"e{k + 1}" for k, i in enumerate(e_ids)}
    adj = []
    for i in range(1, n):
        a, b = i, parents[i]
        if depth[a] % 2 == 1:
            a, b = b, a
        adj.append((v_label[a], e_label[b]))
    return build_bipartite(list(v_label.values()), list(e_label.values()), adj)


def _unicyclic(n: int, extra: int, rng: random.Random) -> BipGraph:
    g = _cycle(n)
    v_names = list(g.v_names)
    e_names = list(g.e_names)
    adj = [(g.v_names[v], g.e_names[e]) for (v, e) in sorted(g.adj)]
    for k in range(extra):
        side = rng.choice(("v", "e"))
        if side == "v":
            anchor = rng.choice(v_names)
            new = f"pe{k + 1}"
            e_names.append(new)
            adj.append((anchor, new))
        else:
            anchor = rng.choice(e_names)
            new = f"pv{k + 1}"
            v_names.append(new)
            adj.append((new, anchor))
    return build_bipartite(v_names, e_names, adj)


def _ladder(n: int) -> BipGraph:
    # Grid with rows 0..n and two columns; colour classes by parity.
    def name(i, j):
        return f"u{i}_{j}"

    v_names, e_names = [], []
    for i in range(n + 1):
        for j in (0, 1):
            (v_names if (i + j) % 2 == 0 else e_names).append(name(i, j))
    adj = []
    for i in range(n + 1):
        pair = (name(i, 0), name(i, 1))
        adj.append(pair if (i % 2 == 0) else (pair[1], pair[0]))
        if i < n:
            for j in (0, 1):
                pair = (name(i, j), name(i + 1, j))
                adj.append(pair if (i + j) % 2 == 0 else (pair[1], pair[0]))
    return build_bipartite(v_names, e_names, adj)


def _complete_bipartite(m: int, n: int) -> BipGraph:
    v_names = [f"v{i + 1}" for i in range(m)]
    e_names = [f"e{j + 1}" for j in range(n)]
    adj = [(v, e) for v in v_names for e in e_names]
    return build_bipartite(v_names, e_names, adj)


def _kmn_minus_matching(m: int, n: int, q: int) -> BipGraph:
    removed = {(f"v{i + 1}", f"e{i + 1}") for i in range(q)}
    v_names = [f"v{i + 1}" for i in range(m)]
    e_names = [f"e{j + 1}" for j in range(n)]
    adj = [(v, e) for v in v_names for e in e_names if (v, e) not in removed]
    g = build_bipartite(v_names, e_names, adj)
    if not g.connected:
        raise GraphError(
            f"K_{{{m},{n}}} minus a {q}-matching is disconnected")
    return g


def _ear_graph(k: int, ears: int, rng: random.Random):
    g = _cycle(k)
    v_names = list(g.v_names)
    e_names = list(g.e_names)
    v_set = set(v_names)
    adj = [(g.v_names[v], g.e_names[e]) for (v, e) in sorted(g.adj)]
    decomposition = []
    for ear in range(ears):
        start = rng.choice(v_names)
        end = rng.choice(e_names)
        length = rng.choice((3, 5))
        inner = (length - 1) // 2
        path = [start]
        # Internal vertices alternate E, V, ..., V so the ear crosses classes
        # and keeps the graph balanced.
        for step in range(2 * inner):
            label = f"r{ear + 1}x{step + 1}"
            if step % 2 == 0:
                e_names.append(label)
            else:
                v_names.append(label)
                v_set.add(label)
            path.append(label)
        path.append(end)
        for a, b in zip(path, path[1:]):
            adj.append((a, b) if a in v_set else (b, a))
        decomposition.append(tuple(path))
    return build_bipartite(v_names, e_names, adj), tuple(decomposition)


def ear_decomposition(spec: FamilySpec):
    """The ears (as label paths) the seeded generator attached; certifies
    that every ear runs from a V-vertex to an E-vertex with odd length."""
    if spec.tag != "ear_graph":
        raise GraphError("ear_decomposition only applies to ear_graph specs")
    return _ear_graph(spec.params[0], spec.params[1], spec.rng())[1]


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------


def closed_form_interior(spec: FamilySpec) -> IntPoly:
    tag, params = spec.tag, spec.params
    if tag == "tree":
        return IntPoly.one()
    if tag in ("cycle", "unicyclic"):
        n = params[0]
        return IntPoly([1] * n)
    if tag == "ladder":
        return IntPoly([1, 1]) ** params[0]
    if tag == "complete_bipartite":
        m, n = params
        return IntPoly([_binom(n - 1, i) * _binom(m - 1, i) for i in range(m)])
    if tag == "kmn_minus_matching":
        m, n, q = params
        coeffs = [_binom(n - 1, i) * _binom(m - 1, i) for i in range(m)]
        if m >= 2:
            coeffs[1] -= q
        elif q:
            raise GraphError("kmn_minus_matching with m = 1 cannot drop a matching edge")
        return IntPoly(coeffs)
    raise ClosedFormUnavailable(f"no closed-form interior polynomial for {tag!r}")


def closed_form_exterior(spec: FamilySpec) -> IntPoly:
    tag, params = spec.tag, spec.params
    if tag == "tree":
        return IntPoly.one()
    if tag in ("cycle", "unicyclic"):
        n = params[0]
        return IntPoly([1, n - 1])
    if tag == "ladder":
        return IntPoly([1, 1]) ** params[0]
    if tag == "complete_bipartite":
        m, n = params
        return IntPoly([_binom(m + i - 2, i) for i in range(n)])
    if tag == "kmn_minus_matching":
        m, n, q = params
        if m == 2 and q == 2:
            # The usual correction assumes the adjusted hypertrees are
            # distinct from the single-support ones, which fails here; the
            # formula would produce a negative top coefficient.
            raise ClosedFormUnavailable(
                "the matching-deleted exterior formula degenerates for m = 2, q = 2")
        coeffs = [_binom(m + i - 2, i) for i in range(n)]
        coeffs[n - 1] -= q
        return IntPoly(coeffs)
    raise ClosedFormUnavailable(f"no closed-form exterior polynomial for {tag!r}")
