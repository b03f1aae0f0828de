"""Command-line front door.

Grammar::

    hytrex <subcommand> (<file> | family <tag> <params...>)
           [--order a,b,c] [--hyperedges v|e] [--json] [--seed N] [--threads K]

Subcommands: interior, exterior, hypertrees, tutte, family, transform,
verify.  Results go to stdout and are byte-identical across runs for the
same inputs; the hyperedge order in effect is echoed on stderr because
activities (though not the polynomials) depend on it.  Exit status: 0 on
success, 1 when a verification check fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .errors import CapacityError, ClosedFormUnavailable, GraphError
from .graph import (
    BipGraph,
    abstract_dual,
    graph_from_json,
    graph_to_json,
    normalize_edge_order,
)
from .hypertrees import enumerate_hypertrees
from .activity import external_active_flags, internal_active_flags
from .poly import (
    MultiGraph,
    exterior_polynomial,
    interior_polynomial,
    tutte_polynomial,
)
from . import families, transforms, verify

_TRANSFORM_OPS = ("dual", "delete", "delete-leaf", "contract",
                  "identify-pair", "add-parallel")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hytrex",
        description="Interior and exterior polynomials of connected bipartite "
                    "graphs, hypertree enumeration, and a theorem-check suite.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, order=True, side=True):
        p.add_argument("input", nargs="+",
                       help="graph JSON file, or: family <tag> <params...>")
        if order:
            p.add_argument("--order", default=None,
                           help="comma-separated hyperedge labels, smallest first "
                                "(default: input order)")
        if side:
            p.add_argument("--hyperedges", choices=("v", "e"), default="e",
                           help="which colour class acts as the hyperedges")
        p.add_argument("--json", action="store_true", dest="as_json",
                       help="emit JSON instead of ASCII")
        p.add_argument("--seed", type=int, default=None,
                       help="seed for seeded families")
        p.add_argument("--threads", type=int, default=1,
                       help="worker count; results are identical at any value")
        p.add_argument("--max-e", type=int, default=None,
                       help="override the subset-enumeration cap (HYTREX_MAX_E)")

    add_common(sub.add_parser("interior", help="interior polynomial"))
    add_common(sub.add_parser("exterior", help="exterior polynomial"))
    add_common(sub.add_parser("hypertrees",
                              help="hypertrees with their inactivity counts"))
    add_common(sub.add_parser("tutte", help="Tutte polynomial of a multigraph"),
               order=False, side=False)
    add_common(sub.add_parser("family", help="emit a family graph as JSON"),
               order=False, side=False)
    p_tr = sub.add_parser("transform", help="apply a graph surgery")
    add_common(p_tr, order=False, side=False)
    p_tr.add_argument("--op", choices=_TRANSFORM_OPS, required=True)
    p_tr.add_argument("--vertex", default=None, help="vertex label for delete/contract")
    p_tr.add_argument("--pair", default=None,
                      help="two E labels, comma-separated, for identify-pair/add-parallel")
    p_tr.add_argument("--count", type=int, default=1,
                      help="number of added vertices for add-parallel")

    p_v = sub.add_parser("verify", help="run the theorem-check suite")
    p_v.add_argument("checks", help="'all' or a comma-separated list of check names")
    p_v.add_argument("--seed", type=int, default=7)
    p_v.add_argument("--orders", type=int, default=20)
    p_v.add_argument("--max-total", type=int, default=9)
    p_v.add_argument("--random-count", type=int, default=50)
    p_v.add_argument("--random-max", type=int, default=14)
    p_v.add_argument("--threads", type=int, default=1)
    p_v.add_argument("--max-e", type=int, default=None)
    return parser


def _apply_global_flags(args) -> None:
    threads = getattr(args, "threads", 1)
    if threads is not None and threads < 1:
        raise GraphError("--threads must be at least 1")
    max_e = getattr(args, "max_e", None)
    if max_e is not None:
        if max_e < 1:
            raise GraphError("--max-e must be at least 1")
        os.environ["HYTREX_MAX_E"] = str(max_e)


def _load_bipartite(args) -> BipGraph:
    tokens = args.input
    if tokens[0] == "family":
        if len(tokens) < 2:
            raise GraphError("family input needs a tag")
        spec = families.spec_from_cli(tokens[1], tokens[2:], getattr(args, "seed", None))
        return families.generate(spec)
    if len(tokens) != 1:
        raise GraphError("expected one input file or: family <tag> <params...>")
    with open(tokens[0], "r", encoding="utf-8") as fh:
        return graph_from_json(json.load(fh))


def _load_multigraph(args) -> MultiGraph:
    tokens = args.input
    if tokens[0] == "family":
        g = _load_bipartite(args)
        return _as_multigraph(g)
    if len(tokens) != 1:
        raise GraphError("expected one input file or: family <tag> <params...>")
    with open(tokens[0], "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if isinstance(data, dict) and set(data) == {"v", "e", "adj"}:
        return _as_multigraph(graph_from_json(data))
    if not isinstance(data, dict) or set(data) != {"vertices", "edges"}:
        raise GraphError("multigraph JSON must have exactly the keys "
                         "'vertices' and 'edges'")
    labels = data["vertices"]
    if not isinstance(labels, list) or len(set(labels)) != len(labels):
        raise GraphError("'vertices' must be a list of distinct labels")
    index = {name: i for i, name in enumerate(labels)}
    edges = []
    for item in data["edges"]:
        if not (isinstance(item, list) and len(item) == 2):
            raise GraphError(f"bad edge entry {item!r}")
        try:
            edges.append((index[item[0]], index[item[1]]))
        except KeyError as exc:
            raise GraphError(f"unknown vertex label {exc.args[0]!r}") from None
    return MultiGraph(len(labels), edges)


def _as_multigraph(g: BipGraph) -> MultiGraph:
    return MultiGraph(g.n_v + g.n_e, [(v, g.n_v + e) for v, e in sorted(g.adj)])


def _resolve_order(g: BipGraph, text):
    if text is None:
        return None
    labels = text.split(",")
    return [g.e_index(x) for x in labels]


def _echo_order(g: BipGraph, order) -> None:
    order = order if order is not None else range(g.n_e)
    print("order: " + ",".join(g.e_names[e] for e in order), file=sys.stderr)


def _cmd_interior(args) -> int:
    g = _load_bipartite(args)
    if args.hyperedges == "v":
        g = abstract_dual(g)
    order = _resolve_order(g, args.order)
    _echo_order(g, order)
    poly = interior_polynomial(g, order=order)
    print(json.dumps(poly.to_json()) if args.as_json else poly.render("x"))
    return 0


def _cmd_exterior(args) -> int:
    g = _load_bipartite(args)
    if args.hyperedges == "v":
        g = abstract_dual(g)
    order = _resolve_order(g, args.order)
    _echo_order(g, order)
    poly = exterior_polynomial(g, order=order)
    print(json.dumps(poly.to_json()) if args.as_json else poly.render("y"))
    return 0


def _cmd_hypertrees(args) -> int:
    g = _load_bipartite(args)
    if args.hyperedges == "v":
        g = abstract_dual(g)
    order = _resolve_order(g, args.order)
    _echo_order(g, order)
    norm = normalize_edge_order(g, order)
    b = enumerate_hypertrees(g)
    rows = []
    for f in b:
        internal = internal_active_flags(b, f, norm)
        external = external_active_flags(b, f, norm)
        rows.append({
            "f": list(f),
            "internal_inactivity": len(internal) - sum(internal),
            "external_inactivity": len(external) - sum(external),
        })
    if args.as_json:
        out = {"order": [g.e_names[e] for e in norm], "hypertrees": rows}
        print(json.dumps(out, separators=(",", ":")))
    else:
        print("hypertree\tinternal_inactivity\texternal_inactivity")
        for row in rows:
            f_txt = json.dumps(row["f"], separators=(",", ":"))
            print(f"{f_txt}\t{row['internal_inactivity']}\t{row['external_inactivity']}")
    return 0


def _cmd_tutte(args) -> int:
    mg = _load_multigraph(args)
    poly = tutte_polynomial(mg)
    print(json.dumps(poly.to_json()) if args.as_json else poly.render("x", "y"))
    return 0


def _cmd_family(args) -> int:
    tokens = args.input
    if tokens[0] == "family":
        tokens = tokens[1:]
    if not tokens:
        raise GraphError("family needs a tag")
    spec = families.spec_from_cli(tokens[0], tokens[1:], args.seed)
    g = families.generate(spec)
    print(json.dumps(graph_to_json(g)))
    return 0


def _cmd_transform(args) -> int:
    g = _load_bipartite(args)
    op = args.op
    if op == "dual":
        out = abstract_dual(g)
    elif op in ("delete", "delete-leaf", "contract"):
        if not args.vertex:
            raise GraphError(f"--vertex is required for {op}")
        fn = {"delete": transforms.delete_vertex,
              "delete-leaf": transforms.delete_valence1,
              "contract": transforms.contract_vertex}[op]
        out = fn(g, args.vertex)
    else:
        if not args.pair or len(args.pair.split(",")) != 2:
            raise GraphError(f"--pair A,B is required for {op}")
        e1, e2 = args.pair.split(",")
        if op == "identify-pair":
            out = transforms.identify_pair(g, e1, e2)
        else:
            out = transforms.add_parallel_pair_vertices(g, e1, e2, args.count)
    print(json.dumps(graph_to_json(out)))
    return 0


def _cmd_verify(args) -> int:
    if args.checks == "all":
        names = None
    else:
        names = tuple(n.removeprefix("check_") for n in args.checks.split(","))

    def progress(report):
        status = "pass" if report.passed else "FAIL"
        print(f"{report.name}: {status} ({report.instances} instances)",
              file=sys.stderr)

    start = time.perf_counter()
    reports = verify.run_all_checks(
        seed=args.seed, orders_per_graph=args.orders, max_total=args.max_total,
        random_count=args.random_count, random_max_total=args.random_max,
        names=names, progress=progress)
    elapsed = time.perf_counter() - start
    print(f"suite finished in {elapsed:.1f}s", file=sys.stderr)
    passed = all(r.passed for r in reports)
    print(json.dumps({
        "seed": args.seed,
        "passed": passed,
        "checks": [r.to_json() for r in reports],
    }, indent=2))
    return 0 if passed else 1


_DISPATCH = {
    "interior": _cmd_interior,
    "exterior": _cmd_exterior,
    "hypertrees": _cmd_hypertrees,
    "tutte": _cmd_tutte,
    "family": _cmd_family,
    "transform": _cmd_transform,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _apply = _DISPATCH[args.command]
    try:
        _apply_global_flags(args)
        return _apply(args)
    except (GraphError, CapacityError, ClosedFormUnavailable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
