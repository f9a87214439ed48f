"""Poincare and Cheeger bounds on the second eigenvalue, and checkers for the
inequalities relating them.

Every comparison that is an integer or rational inequality is evaluated
exactly with ``int``/``Fraction``; the bound values themselves are also kept
as ``Fraction`` so closed forms can be matched exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .constructions import SpanningTree, bfs_tree, is_subordinate, spanning_tree_routing
from .graph import Graph, GraphError, bfs_distances
from .routing import (
    Pair,
    Routing,
    average_length,
    bottleneck,
    gamma_star,
    path_length,
    total_length,
)

POINCARE = "poincare"
CHEEGER = "cheeger"
TIE = "tie"


def poincare_value(edges: int, d: int, gstar: int, b: int) -> Fraction:
    return 1 - Fraction(2 * edges, d * d * gstar * b)


def cheeger_value(edges: int, d: int, b: int) -> Fraction:
    return 1 - Fraction(edges * edges, 2 * d**4 * b * b)


def poincare_bound(g: Graph, r: Routing) -> Fraction:
    return poincare_value(g.edge_count, g.max_degree, gamma_star(r), bottleneck(r))


def cheeger_bound(g: Graph, r: Routing) -> Fraction:
    return cheeger_value(g.edge_count, g.max_degree, bottleneck(r))


@dataclass(frozen=True)
class BoundsReport:
    n: int
    edges: int
    d: int
    gamma_star: int
    b: int
    gamma_bar: Fraction
    M: int
    poincare: Fraction
    cheeger: Fraction
    comparison_lhs: int  # 4 d^2 b
    comparison_rhs: int  # gamma_star |E|
    winner: str

    @property
    def pigeonhole_floor(self) -> int:
        return ceil(Fraction(self.M, 2 * self.edges))


def winner_of(lhs: int, rhs: int) -> str:
    if lhs > rhs:
        return POINCARE
    if lhs < rhs:
        return CHEEGER
    return TIE


def compare(g: Graph, r: Routing) -> BoundsReport:
    d, e = g.max_degree, g.edge_count
    gs, b = gamma_star(r), bottleneck(r)
    lhs, rhs = 4 * d * d * b, gs * e
    return BoundsReport(
        n=g.n,
        edges=e,
        d=d,
        gamma_star=gs,
        b=b,
        gamma_bar=average_length(r),
        M=total_length(r),
        poincare=poincare_value(e, d, gs, b),
        cheeger=cheeger_value(e, d, b),
        comparison_lhs=lhs,
        comparison_rhs=rhs,
        winner=winner_of(lhs, rhs),
    )


# -- average-length criterion -------------------------------------------------


@dataclass(frozen=True)
class ImplicationCheck:
    premise: bool
    conclusion: bool

    @property
    def holds(self) -> bool:
        return self.conclusion or not self.premise


def length_tradeoff_check(g: Graph, r: Routing) -> ImplicationCheck:
    """If eight times the mean path length reaches the longest length, Poincare wins."""
    rep = compare(g, r)
    return ImplicationCheck(
        premise=8 * rep.gamma_bar >= rep.gamma_star,
        conclusion=rep.comparison_lhs >= rep.comparison_rhs,
    )


# -- long subordinate paths ----------------------------------------------------


def central_edge_count(gstar: int) -> int:
    """Pairs ``(v_i, v_j)``, ``i < j``, of a subordinate path crossing its central edge."""
    half = (gstar + 1) // 2
    return half * ((gstar + 1) - half)


@dataclass(frozen=True)
class CentralEdgeReport:
    gamma_star: int
    b: int
    subordinate_path: tuple[int, ...] | None
    long_enough: bool  # gamma_star > 4|E|/d^2 - 2
    b_floor: int  # central_edge_count(gamma_star)
    b_floor_holds: bool  # vacuous when no subordinate longest path
    conclusion: bool  # d^2 b > gamma_star |E|

    @property
    def premise(self) -> bool:
        return self.subordinate_path is not None and self.long_enough

    @property
    def holds(self) -> bool:
        return self.b_floor_holds and (self.conclusion or not self.premise)


def central_edge_check(g: Graph, r: Routing) -> CentralEdgeReport:
    gs, b = gamma_star(r), bottleneck(r)
    d, e = g.max_degree, g.edge_count
    witness = None
    for _, p in r.sorted_items():
        if path_length(p) == gs and is_subordinate(r, p):
            witness = p
            break
    floor = central_edge_count(gs)
    return CentralEdgeReport(
        gamma_star=gs,
        b=b,
        subordinate_path=witness,
        long_enough=(gs + 2) * d * d > 4 * e,
        b_floor=floor,
        b_floor_holds=witness is None or b >= floor,
        conclusion=d * d * b > gs * e,
    )


# -- trees -------------------------------------------------------------------


def subtree_sizes(tree: Graph, root: int = 0) -> tuple[list[int], list[int]]:
    """Parent array and subtree sizes of ``tree`` rooted at ``root``."""
    dist = bfs_distances(tree, root)
    order = sorted(range(tree.n), key=dist.__getitem__)
    parent = [-1] * tree.n
    for v in order[1:]:
        parent[v] = next(u for u in tree.neighbors(v) if dist[u] == dist[v] - 1)
    size = [1] * tree.n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    return parent, size


def cut_products(tree: Graph) -> dict[Pair, int]:
    """For each tree edge, ``k (n - k)`` where removing it leaves sides ``k`` and ``n - k``."""
    parent, size = subtree_sizes(tree)
    n = tree.n
    return {
        (min(v, parent[v]), max(v, parent[v])): size[v] * (n - size[v])
        for v in range(n)
        if parent[v] >= 0
    }


@dataclass(frozen=True)
class TreeCutReport:
    n: int
    d_T: int
    b_T: int
    max_cut_product: int
    witness_edge: Pair
    witness_small_side: int
    witness_ok: bool  # small side * d_T >= n - 1
    holds: bool  # b_T * d_T^2 >= (n - 1)^2


def tree_cut_check(tree: Graph) -> TreeCutReport:
    """Tree bottleneck lower bound, computed through the tree's unique routing."""
    if not tree.is_tree():
        raise GraphError("tree_cut_check needs a tree")
    n, dT = tree.n, tree.max_degree
    if dT < 2:
        raise GraphError("tree_cut_check needs maximum degree at least 2")
    bT = bottleneck(spanning_tree_routing(tree, bfs_tree(tree)))
    parent, size = subtree_sizes(tree)
    best_v = max(
        (v for v in range(n) if parent[v] >= 0),
        key=lambda v: (min(size[v], n - size[v]), -v),
    )
    small = min(size[best_v], n - size[best_v])
    return TreeCutReport(
        n=n,
        d_T=dT,
        b_T=bT,
        max_cut_product=max(cut_products(tree).values()),
        witness_edge=(min(best_v, parent[best_v]), max(best_v, parent[best_v])),
        witness_small_side=small,
        witness_ok=small * dT >= n - 1,
        holds=bT * dT * dT >= (n - 1) ** 2,
    )


@dataclass(frozen=True)
class TreeRoutingReport:
    n: int
    lhs: int  # d^2 b
    rhs: int  # gamma_star |E|
    strict: bool

    @property
    def holds(self) -> bool:
        return self.lhs > self.rhs if self.n >= 3 else self.lhs >= self.rhs


def tree_routing_check(g: Graph, t: SpanningTree) -> TreeRoutingReport:
    r = spanning_tree_routing(g, t)
    d = g.max_degree
    lhs, rhs = d * d * bottleneck(r), gamma_star(r) * g.edge_count
    return TreeRoutingReport(g.n, lhs, rhs, lhs > rhs)


def poincare_winning_routing(g: Graph) -> Routing:
    """A routing on which the Poincare bound is at least as good as Cheeger's
    (strictly better once ``n >= 3``): paths along a BFS spanning tree."""
    return spanning_tree_routing(g, bfs_tree(g))
