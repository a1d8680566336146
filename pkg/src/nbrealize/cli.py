"""Command-line interface.

Every subcommand reads graphs from graph6 or JSON files, calls the matching
library function and prints line-oriented results. Exit status: 0 on
success, 1 when a decomposition finds the required structure absent, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence

from . import formats
from .errors import InputError, StructureAbsent
from .graph import Graph, dominating_vertices, is_connected, make_family
from .iso import GraphClass
from .profile import check_necessary, local_profile, realizes
from .search import construct_multipartite, locally_cop3_from_cubic, search_realization, soltes_verdict
from .transforms import (
    bipartite_regular,
    expand_class,
    grow,
    grow_init,
    reduce_class,
    reduce_realization,
    regularize,
    split_vertices,
    strip_special_edges,
)


def _read(path: str, fmt: str | None) -> list[Graph]:
    return formats.read_graphs(path, fmt)


def _one(path: str, fmt: str | None) -> Graph:
    graphs = _read(path, fmt)
    if len(graphs) != 1:
        raise InputError(f"{path}: expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def _cls(path: str, fmt: str | None) -> GraphClass:
    graphs = _read(path, fmt)
    if not graphs:
        raise InputError(f"{path}: no graphs in class file")
    return GraphClass(graphs)


def _bool(x: bool) -> str:
    return "true" if x else "false"


class _Out:
    def __init__(self, args: argparse.Namespace):
        self.path = args.output
        self.fmt = args.format or "g6"

    def info(self, line: str) -> None:
        print(line)

    def graphs(self, graphs: Sequence[Graph]) -> None:
        text = formats.dumps(graphs, self.fmt)
        if self.path:
            formats.write_atomic(self.path, text)
        else:
            sys.stdout.write(text)


def cmd_analyze(args, out: _Out) -> int:
    G = _one(args.graph, args.format)
    degs = G.degrees()
    prof = local_profile(G)
    out.info(f"order: {G.n}")
    out.info(f"edges: {G.num_edges}")
    out.info(f"degrees: {min(degs)}..{max(degs)}")
    out.info(f"regular: {_bool(len(set(degs)) == 1)}")
    out.info(f"connected: {_bool(is_connected(G))}")
    out.info(f"dominating: {len(dominating_vertices(G))}")
    out.info(f"profile_size: {len(prof)}")
    out.graphs(prof.members)
    return 0


def cmd_check(args, out: _Out) -> int:
    G = _one(args.graph, args.format)
    H = _cls(args.cls, args.format)
    out.info(f"realizes: {_bool(realizes(G, H))}")
    return 0


def cmd_necessary(args, out: _Out) -> int:
    H = _cls(args.cls, args.format)
    verdict = check_necessary(H, args.s)
    out.info(f"verdict: {verdict.outcome}")
    for w in verdict.witnesses:
        out.info(f"witness: member={w.graph_index} vertex={w.vertex} reason={w.reason} degree={w.degree}")
    return 0


def cmd_reduce(args, out: _Out) -> int:
    if (args.graph is None) == (args.cls is None):
        raise InputError("reduce takes either a realization GRAPH or --class CLASS")
    if args.cls is not None:
        dec = reduce_class(_cls(args.cls, args.format))
        out.info(f"s: {dec.s}")
        out.graphs(dec.F.members)
    else:
        G0, s = reduce_realization(_one(args.graph, args.format))
        out.info(f"s: {s}")
        out.graphs([G0])
    return 0


def cmd_expand(args, out: _Out) -> int:
    out.graphs(expand_class(_cls(args.cls, args.format), args.s).members)
    return 0


def cmd_regularize(args, out: _Out) -> int:
    out.graphs([regularize(_one(args.graph, args.format), args.m)])
    return 0


def cmd_strip(args, out: _Out) -> int:
    out.graphs([strip_special_edges(_one(args.graph, args.format))])
    return 0


def _mult(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"--mult must be a comma-separated list of integers, got {text!r}") from None


def cmd_grow(args, out: _Out) -> int:
    state = grow_init(_one(args.graph, args.format), _cls(args.cls, args.format), _mult(args.mult))
    states = grow(state, args.depth)
    out.graphs([s.graph for s in states])
    return 0


def cmd_split(args, out: _Out) -> int:
    out.graphs([split_vertices(_one(args.graph, args.format), _cls(args.cls, args.format))])
    return 0


def cmd_search(args, out: _Out) -> int:
    res = search_realization(_cls(args.cls, args.format), args.max_order)
    out.info(f"status: {res.status}")
    if res.found:
        out.info(f"order: {res.max_order_checked}")
    else:
        out.info(f"exhausted up to {res.max_order_checked}")
    out.info(f"nodes_expanded: {res.nodes_expanded}")
    out.info(f"graphs_tested: {res.graphs_tested}")
    if res.found:
        out.graphs([res.witness])
    return 0


def cmd_bipartite_regular(args, out: _Out) -> int:
    out.graphs([bipartite_regular(args.r, args.n)])
    return 0


def cmd_multipartite(args, out: _Out) -> int:
    v = soltes_verdict(args.t, args.r)
    out.info(f"applicable: {_bool(v.applicable)}")
    out.info(f"divisible: {_bool(v.divisible)}")
    out.info(f"realizable: {'unknown' if v.realizable is None else _bool(v.realizable)}")
    if v.divisible:
        out.graphs([construct_multipartite(args.t, args.r)])
    return 0


def cmd_cop3(args, out: _Out) -> int:
    out.graphs([locally_cop3_from_cubic(_one(args.graph, args.format))])
    return 0


def cmd_convert(args, out: _Out) -> int:
    out.graphs(formats.read_graphs(args.graph))
    return 0


def cmd_family(args, out: _Out) -> int:
    out.graphs([make_family(args.kind, *args.params)])
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["g6", "json"], help="input/output format (input is sniffed if omitted)")
    common.add_argument("-o", "--output", help="write graph output here (atomically) instead of stdout")
    common.add_argument("--seed", type=int, help="reserved; all algorithms are deterministic")

    parser = argparse.ArgumentParser(prog="nbrealize", description="Neighbourhood realizability toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(fn=fn)
        return p

    p = add("analyze", cmd_analyze, "summary and local profile of a graph")
    p.add_argument("graph")
    p = add("check", cmd_check, "does GRAPH realize the class?")
    p.add_argument("graph")
    p.add_argument("--class", dest="cls", required=True)
    p = add("necessary", cmd_necessary, "degree conditions for classes with s dominating vertices")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--s", type=int, required=True)
    p = add("reduce", cmd_reduce, "strip K_s + F[K_{s+1}] structure from a class or realization")
    p.add_argument("graph", nargs="?")
    p.add_argument("--class", dest="cls")
    p = add("expand", cmd_expand, "build {K_s + F_i[K_{s+1}]} from a class F")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--s", type=int, required=True)
    p = add("regularize", cmd_regularize, "regular graph realizing the padded profile")
    p.add_argument("graph")
    p.add_argument("--m", type=int, default=1)
    p = add("strip", cmd_strip, "delete edges lying in no triangle")
    p.add_argument("graph")
    p = add("grow", cmd_grow, "clique-gluing growth snapshots, one graph per step")
    p.add_argument("graph", help="base realization")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--mult", required=True, help="comma list n_1,...,n_k in class order")
    p.add_argument("--depth", type=int, default=1)
    p = add("split", cmd_split, "split every vertex along its neighbourhood components")
    p.add_argument("graph")
    p.add_argument("--class", dest="cls", required=True)
    p = add("search", cmd_search, "bounded search for a finite realization")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--max-order", type=int, default=8)
    p = add("bipartite-regular", cmd_bipartite_regular, "r-regular bipartite graph of order 2n")
    p.add_argument("r", type=int)
    p.add_argument("n", type=int)
    p = add("multipartite", cmd_multipartite, "density-condition verdict and multipartite realization")
    p.add_argument("t", type=int)
    p.add_argument("r", type=int)
    p = add("cop3", cmd_cop3, "locally (K_2 u K_1) graph from a cubic graph")
    p.add_argument("graph")
    p = add("convert", cmd_convert, "convert between graph6 and JSON (output chosen by --format)")
    p.add_argument("graph")
    p = add("family", cmd_family, "emit a named graph, e.g. 'family cycle 5'")
    p.add_argument("kind", choices=["complete", "empty", "cycle", "path", "complete_bipartite", "complete_multipartite"])
    p.add_argument("params", type=int, nargs="+")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args, _Out(args))
    except StructureAbsent as exc:
        print(f"structure absent: {exc}", file=sys.stderr)
        return 1
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
