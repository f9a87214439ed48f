"""Best achievable Poincare bound against best achievable Cheeger bound.

Enumerates every connected graph on ``n`` vertices up to isomorphism (networkx
atlas, n <= 5 keeps exact search cheap) and reports, per graph, min gamma*b,
min b, which optimised bound is smaller, whether one routing attains both
minima, and whether the gamma*b optimum needs paths longer than the diameter.

    python scripts/optimal_vs_optimal.py --n 5
"""

from __future__ import annotations

import argparse
import logging
from collections import Counter

import networkx as nx

from canonpaths.graph import Graph
from canonpaths.optimizer import optimal_bound_comparison


def connected_graphs(n: int):
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == n and nx.is_connected(h):
            yield Graph.from_edges(n, sorted(tuple(sorted(e)) for e in h.edges()))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--n", type=int, default=5, choices=range(2, 6))
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)

    tally: Counter = Counter()
    for g in connected_graphs(args.n):
        rep = optimal_bound_comparison(g)
        tally[rep.winner] += 1
        tally["joint"] += rep.jointly_attained
        tally["long"] += rep.gamma_b_needs_long_paths
        print(
            f"|E|={g.edge_count:2d} d={g.max_degree} diam={rep.diameter} "
            f"min gb={rep.min_gamma_b:3d} min b={rep.min_b:2d} "
            f"P={float(rep.best_poincare):.6f} C={float(rep.best_cheeger):.6f} "
            f"winner={rep.winner:8s} joint={rep.jointly_attained} long={rep.gamma_b_needs_long_paths}"
        )
    graphs = tally["poincare"] + tally["cheeger"] + tally["tie"]
    print(
        f"{graphs} graphs: poincare {tally['poincare']}, cheeger {tally['cheeger']}, "
        f"tie {tally['tie']}; jointly attained {tally['joint']}; needs long paths {tally['long']}"
    )


if __name__ == "__main__":
    main()
