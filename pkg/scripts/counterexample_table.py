"""Poincare vs Cheeger on K_n with one long canonical path.

Prints, for each n, the two bounds for the long-path routing, the winner, and
the spectral gap of the walk. The Cheeger bound wins from n = 17 on for the
Hamiltonian long path, and the Eulerian trail (n >= 7) makes the Poincare
bound trivially weak.

    python scripts/counterexample_table.py --max-n 40 --eulerian
"""

from __future__ import annotations

import argparse

from canonpaths.bounds import compare
from canonpaths.constructions import counterexample_routing, eulerian_counterexample_routing
from canonpaths.graph import complete_graph
from canonpaths.spectral import spectrum


def row(n: int, eulerian: bool) -> str:
    g = complete_graph(n)
    r = eulerian_counterexample_routing(n) if eulerian else counterexample_routing(n)
    rep = compare(g, r)
    beta1 = spectrum(g).beta1
    return (
        f"{n:4d} {rep.gamma_star:6d} {rep.b:3d} {float(rep.poincare):12.8f} "
        f"{float(rep.cheeger):12.8f} {rep.winner:>8s} {beta1:12.8f}"
    )


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--min-n", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=40)
    ap.add_argument("--eulerian", action="store_true", help="use the Eulerian-trail long path")
    args = ap.parse_args()
    lo = max(args.min_n, 7 if args.eulerian else 3)
    print(f"{'n':>4s} {'gamma*':>6s} {'b':>3s} {'poincare':>12s} {'cheeger':>12s} {'winner':>8s} {'beta1':>12s}")
    for n in range(lo, args.max_n + 1):
        print(row(n, args.eulerian))


if __name__ == "__main__":
    main()
