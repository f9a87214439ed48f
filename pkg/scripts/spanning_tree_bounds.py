"""Spanning-tree routings on random graphs: how far d^2 b sits above gamma* |E|.

For each sampled graph a uniform random spanning tree is routed and the
ratio d^2 b / (gamma* |E|) is recorded (always > 1 for n >= 3, so the
Poincare bound wins). Summary statistics go to stdout; ``--csv`` writes rows.

    python scripts/spanning_tree_bounds.py --trials 500 --max-n 14 --csv out.csv
"""

from __future__ import annotations

import argparse
import csv
import random

import numpy as np

from canonpaths.bounds import tree_routing_check
from canonpaths.constructions import random_spanning_tree
from canonpaths.sweeps import random_graph


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--trials", type=int, default=300)
    ap.add_argument("--min-n", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=14)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--csv", metavar="FILE")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    rows = []
    for _ in range(args.trials):
        g = random_graph(rng, args.min_n, args.max_n)
        t = random_spanning_tree(g, rng.getrandbits(32))
        rep = tree_routing_check(g, t)
        rows.append((g.n, g.edge_count, rep.lhs, rep.rhs, rep.lhs / rep.rhs, rep.holds))

    ratios = np.array([r[4] for r in rows])
    print(f"trials={len(rows)} all hold={all(r[5] for r in rows)}")
    print(f"ratio d^2 b / (gamma* |E|): min {ratios.min():.4f}  median {np.median(ratios):.4f}  max {ratios.max():.4f}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["n", "edges", "d2b", "gamma_E", "ratio", "holds"])
            w.writerows(rows)


if __name__ == "__main__":
    main()
