"""Command-line driver.

    canonpaths analyze  --complete 17 --routing counterexample
    canonpaths optimize --cycle 5 --objective b --mode exact
    canonpaths verify   tree-routing --max-n 12 --trials 200 --seed 1

Reports go to stdout as JSON, diagnostics to stderr. Exit codes: 0 ok,
1 a verification sweep found a failing instance, 2 parse or validation
error, 3 routing not applicable to the graph, 4 instance too large for
exact search.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path as FilePath

from . import constructions as cons
from .bounds import tree_routing_check
from .graph import (
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    from_edge_list,
    path_graph,
    random_connected_graph,
    random_tree,
    star_graph,
)
from .optimizer import Objective, SearchLimitExceeded, enumerate_optimal, local_search
from .report import analysis_report, dumps, fraction_str
from .routing import RoutingError, bottleneck, format_routing, gamma_star, parse_routing, validate
from .spectral import spectrum, tv_bound_check
from .sweeps import SUITES, run_suite

EXIT_INVALID = 2
EXIT_INAPPLICABLE = 3
EXIT_TOO_LARGE = 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def add_graph_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", metavar="FILE", help="edge-list file")
    src.add_argument("--complete", type=int, metavar="N")
    src.add_argument("--cycle", type=int, metavar="N")
    src.add_argument("--path", type=int, metavar="N")
    src.add_argument("--star", type=int, metavar="N")
    src.add_argument("--tree-random", type=int, metavar="N")
    src.add_argument("--random", type=int, metavar="N", help="random connected graph")
    p.add_argument("--edge-probability", type=float, default=0.4)
    p.add_argument("--seed", type=int, default=0)


def load_graph(args) -> Graph:
    try:
        if args.graph:
            return from_edge_list(FilePath(args.graph).read_text())
        if args.complete is not None:
            return complete_graph(args.complete)
        if args.cycle is not None:
            return cycle_graph(args.cycle)
        if args.path is not None:
            return path_graph(args.path)
        if args.star is not None:
            return star_graph(args.star)
        if args.tree_random is not None:
            return random_tree(args.tree_random, seed=args.seed)
        return random_connected_graph(args.random, args.edge_probability, seed=args.seed)
    except (GraphError, OSError) as exc:
        raise CliError(f"graph: {exc}", EXIT_INVALID) from None


TREE_BUILDERS = {
    "bfs": lambda g, seed: cons.bfs_tree(g),
    "dfs": lambda g, seed: cons.dfs_tree(g),
    "hamiltonian": lambda g, seed: cons.hamiltonian_path_tree(g),
    "star": lambda g, seed: cons.star_tree(g),
    "random": lambda g, seed: cons.random_spanning_tree(g, seed),
}


def build_routing(g: Graph, spec: str, seed: int):
    """Return ``(routing, spanning_tree_or_None)`` for a ``--routing`` value."""
    kind, _, arg = spec.partition(":")
    try:
        if kind == "geodesic":
            return cons.geodesic_routing(g), None
        if kind == "tree":
            if arg not in TREE_BUILDERS:
                raise CliError(f"unknown tree builder {arg!r}", EXIT_INVALID)
            t = TREE_BUILDERS[arg](g, seed)
            return cons.spanning_tree_routing(g, t), t
        if kind == "counterexample":
            if not g.is_complete():
                raise CliError("counterexample routing needs a complete graph", EXIT_INAPPLICABLE)
            return cons.counterexample_routing(g.n), None
        if kind == "eulerian":
            if not g.is_complete():
                raise CliError("eulerian routing needs a complete graph", EXIT_INAPPLICABLE)
            return cons.eulerian_counterexample_routing(g.n), None
        if kind == "file":
            r = parse_routing(FilePath(arg).read_text(), g.n)
            errs = validate(g, r)
            if errs:
                raise CliError("invalid routing: " + "; ".join(map(str, errs)), EXIT_INVALID)
            return r, None
    except (GraphError, RoutingError) as exc:
        code = EXIT_INVALID if kind == "file" else EXIT_INAPPLICABLE
        raise CliError(f"routing: {exc}", code) from None
    except OSError as exc:
        raise CliError(f"routing: {exc}", EXIT_INVALID) from None
    raise CliError(f"unknown routing {spec!r}", EXIT_INVALID)


def cmd_analyze(args) -> int:
    g = load_graph(args)
    r, tree = build_routing(g, args.routing, args.seed)
    extra = {}
    if tree is not None:
        t2 = tree_routing_check(g, tree)
        extra["tree_routing"] = {"lhs": t2.lhs, "rhs": t2.rhs, "strict": t2.strict, "holds": t2.holds}
    tv = tv_bound_check(g, args.start, args.tv) if args.tv else None
    rep = analysis_report(g, r, args.routing, spectrum(g), tv=tv, extra_checks=extra)
    sys.stdout.write(rep.to_json())
    return 0


def cmd_optimize(args) -> int:
    g = load_graph(args)
    obj = Objective(args.objective)
    if args.mode == "exact":
        try:
            res = enumerate_optimal(g, obj, max_n=args.max_n, max_nodes=args.max_nodes)
        except SearchLimitExceeded as exc:
            raise CliError(f"exact search refused: {exc}", EXIT_TOO_LARGE) from None
    else:
        res = local_search(g, obj, seed=args.seed, max_iters=args.max_iters)
    value = res.objective_value
    out = {
        "objective": obj.value,
        "mode": args.mode,
        "value": value if isinstance(value, int) else fraction_str(value),
        "value_decimal": float(value),
        "optimal": res.optimal,
        "evaluations": res.evaluations,
        "gamma_star": gamma_star(res.routing),
        "b": bottleneck(res.routing),
        "routing": format_routing(res.routing).splitlines(),
    }
    sys.stdout.write(dumps(out))
    return 0


def cmd_verify(args) -> int:
    res = run_suite(args.suite, trials=args.trials, max_n=args.max_n, seed=args.seed, rmax=args.rmax)
    print(res.summary())
    for f in res.failures[:5]:
        print(f.describe())
    return 0 if res.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="canonpaths", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="bounds, spectrum and checks for one routing")
    add_graph_args(p)
    p.add_argument(
        "--routing",
        default="geodesic",
        help="geodesic | tree:{bfs,dfs,hamiltonian,star,random} | file:PATH | counterexample | eulerian",
    )
    p.add_argument("--tv", type=int, metavar="RMAX", help="also check the TV bound up to RMAX steps")
    p.add_argument("--start", type=int, default=0, help="start vertex for --tv")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("optimize", help="search for a routing minimising a bound")
    add_graph_args(p)
    p.add_argument("--objective", choices=[o.value for o in Objective], default="gamma-b")
    p.add_argument("--mode", choices=["exact", "local"], default="exact")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--max-nodes", type=int, default=10**7)
    p.add_argument("--max-iters", type=int, default=1000)
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("verify", help="randomised sweep of one inequality")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rmax", type=int, default=50)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"canonpaths: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
