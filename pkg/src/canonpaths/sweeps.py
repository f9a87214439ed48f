"""Randomised verification sweeps over graphs and routings.

Each suite draws ``trials`` instances from a seeded generator and records any
instance on which a proven inequality fails. A failure therefore points at a
bug in this package, not at the mathematics.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .bounds import (
    cheeger_bound,
    central_edge_check,
    tree_cut_check,
    poincare_bound,
    length_tradeoff_check,
    tree_routing_check,
)
from .constructions import (
    geodesic_routing,
    random_routing,
    random_spanning_tree,
    spanning_tree_routing,
)
from .graph import Graph, random_connected_graph, random_tree, to_edge_list
from .routing import Routing, format_routing
from .spectral import spectrum, tv_bound_check

BOUND_SLACK = 1e-8


def random_graph(rng: random.Random, min_n: int, max_n: int) -> Graph:
    n = rng.randint(min_n, max_n)
    return random_connected_graph(n, rng.uniform(0.1, 0.9), seed=rng.getrandbits(32))


def routing_corpus(g: Graph, rng: random.Random, extra: int = 3) -> Iterator[tuple[str, Routing]]:
    """Geodesic, random spanning tree, and ``extra`` random simple-path routings."""
    yield "geodesic", geodesic_routing(g)
    yield "tree:random", spanning_tree_routing(g, random_spanning_tree(g, rng.getrandbits(32)))
    for i in range(extra):
        yield f"random:{i}", random_routing(g, rng.getrandbits(32))


@dataclass
class Failure:
    graph: Graph
    routing: Routing | None
    detail: str

    def describe(self) -> str:
        parts = [self.detail, "# graph", to_edge_list(self.graph).rstrip()]
        if self.routing is not None:
            parts += ["# routing", format_routing(self.routing).rstrip()]
        return "\n".join(parts)


@dataclass
class SweepResult:
    suite: str
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.suite}: {status} ({self.checked - len(self.failures)}/{self.checked} checks)"


def sweep_length_tradeoff(rng, trials, max_n, **_):
    res = SweepResult("length-tradeoff")
    for _ in range(trials):
        g = random_graph(rng, 2, max_n)
        for tag, r in routing_corpus(g, rng):
            res.checked += 1
            if not length_tradeoff_check(g, r).holds:
                res.failures.append(Failure(g, r, f"length_tradeoff fails on {tag} routing"))
    return res


def sweep_tree_routing(rng, trials, max_n, **_):
    res = SweepResult("tree-routing")
    for _ in range(trials):
        g = random_graph(rng, 2, max_n)
        t = random_spanning_tree(g, rng.getrandbits(32))
        rep = tree_routing_check(g, t)
        res.checked += 1
        if not rep.holds:
            r = spanning_tree_routing(g, t)
            res.failures.append(Failure(g, r, f"d^2 b = {rep.lhs} vs gamma* |E| = {rep.rhs}"))
    return res


def sweep_central_edge(rng, trials, max_n, **_):
    res = SweepResult("central-edge")
    for _ in range(trials):
        g = random_graph(rng, 2, max_n)
        r = spanning_tree_routing(g, random_spanning_tree(g, rng.getrandbits(32)))
        rep = central_edge_check(g, r)
        res.checked += 1
        if not rep.holds or rep.subordinate_path is None:
            res.failures.append(Failure(g, r, f"central_edge report {rep}"))
    return res


def sweep_tree_cut(rng, trials, max_n, **_):
    res = SweepResult("tree-cut")
    for _ in range(trials):
        t = random_tree(rng.randint(3, max(3, max_n)), seed=rng.getrandbits(32))
        rep = tree_cut_check(t)
        res.checked += 1
        if not (rep.holds and rep.witness_ok and rep.b_T == rep.max_cut_product):
            res.failures.append(Failure(t, None, f"tree_cut report {rep}"))
    return res


def sweep_bounds_validity(rng, trials, max_n, **_):
    res = SweepResult("bounds-validity")
    for _ in range(trials):
        g = random_graph(rng, 2, max_n)
        beta1 = spectrum(g).beta1
        for tag, r in routing_corpus(g, rng):
            res.checked += 1
            p, c = float(poincare_bound(g, r)), float(cheeger_bound(g, r))
            if beta1 > min(p, c) + BOUND_SLACK:
                res.failures.append(
                    Failure(g, r, f"beta1 = {beta1!r} exceeds bound on {tag}: P = {p}, C = {c}")
                )
    return res


def sweep_tv(rng, trials, max_n, rmax=50, **_):
    res = SweepResult("tv")
    for _ in range(trials):
        g = random_graph(rng, 2, max_n)
        rep = tv_bound_check(g, 0, rmax)
        res.checked += 1
        if not rep.holds:
            res.failures.append(Failure(g, None, f"tv bound violated by {rep.worst_margin:.3e}"))
    return res


SUITES: dict[str, Callable[..., SweepResult]] = {
    "length-tradeoff": sweep_length_tradeoff,
    "tree-routing": sweep_tree_routing,
    "central-edge": sweep_central_edge,
    "tree-cut": sweep_tree_cut,
    "bounds-validity": sweep_bounds_validity,
    "tv": sweep_tv,
}


def run_suite(name: str, trials: int = 100, max_n: int = 10, seed: int = 0, rmax: int = 50):
    return SUITES[name](random.Random(seed), trials=trials, max_n=max_n, rmax=rmax)
