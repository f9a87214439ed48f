"""Searching for routings that minimise ``gamma_star * b`` or ``b``.

Exact search enumerates routings made of simple paths only: a path with a
repeated vertex can be shortcut, which never raises either the bottleneck or
the longest length, so the optimum is unchanged.
"""

from __future__ import annotations

import enum
import logging
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .bounds import cheeger_value, poincare_value
from .constructions import geodesic_routing
from .graph import Graph, diameter, distance_matrix
from .routing import Pair, Path, Routing, all_pairs, bottleneck, gamma_star

log = logging.getLogger(__name__)

DEFAULT_MAX_N = 5
DEFAULT_MAX_NODES = 10**7


class Objective(str, enum.Enum):
    GAMMA_B = "gamma-b"
    B = "b"
    POINCARE = "poincare"
    CHEEGER = "cheeger"

    @property
    def integer_kind(self) -> "Objective":
        """The integer objective this one is monotone in."""
        if self in (Objective.GAMMA_B, Objective.POINCARE):
            return Objective.GAMMA_B
        return Objective.B


class SearchLimitExceeded(RuntimeError):
    """The instance is too large for exact enumeration; use local search."""


@dataclass(frozen=True)
class SearchResult:
    routing: Routing
    objective: Objective
    objective_value: int | Fraction
    optimal: bool
    evaluations: int


def integer_value(kind: Objective, gstar: int, b: int) -> int:
    return gstar * b if kind.integer_kind is Objective.GAMMA_B else b


def objective_value(g: Graph, r: Routing, kind: Objective) -> int | Fraction:
    gs, b = gamma_star(r), bottleneck(r)
    if kind is Objective.POINCARE:
        return poincare_value(g.edge_count, g.max_degree, gs, b)
    if kind is Objective.CHEEGER:
        return cheeger_value(g.edge_count, g.max_degree, b)
    return integer_value(kind, gs, b)


def simple_paths(g: Graph, x: int, y: int, max_length: int | None = None) -> list[Path]:
    """All simple paths from ``x`` to ``y``, ordered by length then lexicographically."""
    limit = g.n - 1 if max_length is None else max_length
    out: list[Path] = []
    path = [x]
    on_path = {x}

    def extend(v: int) -> None:
        if v == y:
            out.append(tuple(path))
            return
        if len(path) > limit:
            return
        for u in g.neighbors(v):
            if u not in on_path:
                path.append(u)
                on_path.add(u)
                extend(u)
                path.pop()
                on_path.discard(u)

    extend(x)
    out.sort(key=lambda p: (len(p), p))
    return out


def _edge_index(g: Graph) -> dict[Pair, int]:
    return {e: i for i, e in enumerate(g.directed_edges())}


class _Search:
    """Depth-first branch-and-bound over one path choice per ordered pair."""

    def __init__(self, g, kind, max_nodes, max_b=None, max_gamma=None):
        self.g = g
        self.kind = kind.integer_kind
        self.max_nodes = max_nodes
        self.max_b = max_b
        self.max_gamma = max_gamma
        idx = _edge_index(g)
        dist = distance_matrix(g)
        self.floor_gamma = diameter(g)
        pairs = list(all_pairs(g.n))
        opts = {p: simple_paths(g, *p, max_gamma) for p in pairs}
        self.pairs = sorted(pairs, key=lambda p: (len(opts[p]), p))
        self.options = [
            [(path, [idx[e] for e in zip(path, path[1:])]) for path in opts[p]] for p in self.pairs
        ]
        # sum of shortest lengths still to be routed after position i
        rest = [dist[x][y] for x, y in self.pairs]
        self.remaining_min = [sum(rest[i:]) for i in range(len(rest) + 1)]
        self._init_cuts()
        self.two_e = 2 * g.edge_count
        self.loads = [0] * len(idx)
        self.nodes = 0
        self.best: int | None = None
        self.best_choice: list[Path] | None = None
        self.choice: list[Path] = []

    def _init_cuts(self) -> None:
        """Directed cuts S -> V \\ S. Every path from S to the complement crosses
        the cut at least once, so the cut edges share that many traversals."""
        n = self.g.n
        edges = list(self.g.directed_edges())
        self.cut_sizes, self.cut_remaining = [], []
        crossings = [[[] for _ in opts] for opts in self.options]
        for mask in range(1, (1 << n) - 1):
            inside = [bool(mask >> v & 1) for v in range(n)]
            cut_edges = {i for i, (u, v) in enumerate(edges) if inside[u] and not inside[v]}
            c = len(self.cut_sizes)
            self.cut_sizes.append(len(cut_edges))
            need = [int(inside[x] and not inside[y]) for x, y in self.pairs]
            self.cut_remaining.append([sum(need[i:]) for i in range(len(need) + 1)])
            for depth, opts in enumerate(self.options):
                for k, (_, ids) in enumerate(opts):
                    hits = sum(1 for i in ids if i in cut_edges)
                    if hits:
                        crossings[depth][k].append((c, hits))
        self.crossings = crossings
        self.cut_loads = [0] * len(self.cut_sizes)
        self.cut_floor = max(
            ceil(r[0] / size) for r, size in zip(self.cut_remaining, self.cut_sizes)
        )

    def _cut_bound(self, depth: int) -> int:
        best = 0
        for c, size in enumerate(self.cut_sizes):
            v = -(-(self.cut_loads[c] + self.cut_remaining[c][depth]) // size)
            if v > best:
                best = v
        return best

    def lower_bound(self, depth, b_run, g_run, m_run):
        b_lb = max(b_run, self.cut_floor, ceil((m_run + self.remaining_min[depth]) / self.two_e))
        value = self._bound_value(b_lb, g_run)
        if self.best is not None and value >= self.best:
            return value  # already pruned; skip the costlier cut scan
        return self._bound_value(max(b_lb, self._cut_bound(depth)), g_run)

    def _bound_value(self, b_lb, g_run):
        if self.kind is Objective.B:
            return b_lb
        return b_lb * max(g_run, self.floor_gamma)

    def run(self, incumbent: Routing | None) -> None:
        if incumbent is not None:
            gs, b = gamma_star(incumbent), bottleneck(incumbent)
            if self._admissible(gs, b):
                self.best = integer_value(self.kind, gs, b)
                self.best_choice = [incumbent[p] for p in self.pairs]
        self._descend(0, 0, 0, 0)

    def _admissible(self, gs, b):
        return (self.max_b is None or b <= self.max_b) and (
            self.max_gamma is None or gs <= self.max_gamma
        )

    def _descend(self, depth, b_run, g_run, m_run):
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise SearchLimitExceeded(f"branch-and-bound exceeded {self.max_nodes} nodes")
        if depth == len(self.pairs):
            value = integer_value(self.kind, g_run, b_run)
            if self.best is None or value < self.best:
                self.best = value
                self.best_choice = list(self.choice)
            return
        loads = self.loads
        cut_loads = self.cut_loads
        for k, (path, edges) in enumerate(self.options[depth]):
            length = len(edges)
            for i in edges:
                loads[i] += 1
            for c, hits in self.crossings[depth][k]:
                cut_loads[c] += hits
            nb = max(b_run, max(loads[i] for i in edges))
            ng = max(g_run, length)
            ok = self.max_b is None or nb <= self.max_b
            if ok and (
                self.best is None or self.lower_bound(depth + 1, nb, ng, m_run + length) < self.best
            ):
                self.choice.append(path)
                self._descend(depth + 1, nb, ng, m_run + length)
                self.choice.pop()
            for i in edges:
                loads[i] -= 1
            for c, hits in self.crossings[depth][k]:
                cut_loads[c] -= hits

    def routing(self) -> Routing | None:
        if self.best_choice is None:
            return None
        return Routing(self.g.n, dict(zip(self.pairs, self.best_choice)))


def _check_size(g: Graph, max_n: int) -> None:
    if g.n > max_n:
        raise SearchLimitExceeded(f"exact search limited to n <= {max_n}, got n = {g.n}")


def enumerate_optimal(
    g: Graph,
    objective: Objective = Objective.GAMMA_B,
    max_n: int = DEFAULT_MAX_N,
    max_nodes: int = DEFAULT_MAX_NODES,
    max_b: int | None = None,
    max_gamma: int | None = None,
    warm_start: bool = True,
    incumbent: Routing | None = None,
) -> SearchResult:
    """Exact optimum over simple-path routings.

    ``max_b`` and ``max_gamma`` restrict the search to routings with
    bottleneck / longest length at most that value. With ``warm_start`` the
    geodesic routing seeds the incumbent; otherwise the search starts with
    no bound, which is slower but exercises the full tree. An explicit
    ``incumbent`` (simple paths only) replaces the geodesic seed. Raises
    :class:`SearchLimitExceeded` if the graph or the search tree is too big,
    and ``ValueError`` if the constraints admit no routing.
    """
    objective = Objective(objective)
    _check_size(g, max_n)
    s = _Search(g, objective, max_nodes, max_b=max_b, max_gamma=max_gamma)
    if incumbent is None and warm_start:
        incumbent = geodesic_routing(g)
    s.run(incumbent)
    r = s.routing()
    if r is None:
        raise ValueError("no simple-path routing satisfies the constraints")
    return SearchResult(r, objective, objective_value(g, r, objective), True, s.nodes)


@dataclass(frozen=True)
class OptimalComparison:
    min_gamma_b: int
    min_b: int
    best_poincare: Fraction
    best_cheeger: Fraction
    winner: str
    jointly_attained: bool  # one routing reaches both minima
    gamma_b_needs_long_paths: bool  # every gamma*b minimiser has gamma_star > diameter
    diameter: int
    evaluations: int


def optimal_bound_comparison(
    g: Graph, max_n: int = DEFAULT_MAX_N, max_nodes: int = DEFAULT_MAX_NODES
) -> OptimalComparison:
    """Best Poincare bound against best Cheeger bound over all simple-path routings."""
    gb = enumerate_optimal(g, Objective.GAMMA_B, max_n, max_nodes)
    bb = enumerate_optimal(g, Objective.B, max_n, max_nodes)
    joint = enumerate_optimal(
        g, Objective.GAMMA_B, max_n, max_nodes, max_b=bb.objective_value, incumbent=bb.routing
    )
    diam = diameter(g)
    try:
        short = enumerate_optimal(g, Objective.GAMMA_B, max_n, max_nodes, max_gamma=diam)
        needs_long = short.objective_value > gb.objective_value
        evals = short.evaluations
    except ValueError:
        needs_long, evals = True, 0
    if needs_long:
        log.info("gamma*b optimum on %r needs paths longer than the diameter", g.adjacency)
    e, d = g.edge_count, g.max_degree
    best_p = 1 - Fraction(2 * e, d * d * gb.objective_value)
    best_c = cheeger_value(e, d, bb.objective_value)
    winner = "poincare" if best_p < best_c else "cheeger" if best_c < best_p else "tie"
    return OptimalComparison(
        min_gamma_b=gb.objective_value,
        min_b=bb.objective_value,
        best_poincare=best_p,
        best_cheeger=best_c,
        winner=winner,
        jointly_attained=joint.objective_value == gb.objective_value,
        gamma_b_needs_long_paths=needs_long,
        diameter=diam,
        evaluations=gb.evaluations + bb.evaluations + joint.evaluations + evals,
    )


# -- local search --------------------------------------------------------------


def local_search(
    g: Graph,
    objective: Objective = Objective.GAMMA_B,
    seed: int | None = 0,
    max_iters: int = 1000,
    slack: int = 2,
    max_alternatives: int = 64,
) -> SearchResult:
    """First-improvement descent from the geodesic routing.

    A move reroutes one ordered pair along another simple path of length at
    most ``diameter + slack``. Moves are ranked by the integer objective, then
    by how many directed edges sit at the maximum load, then by the sum of
    squared loads, so that descent can leave plateaus of the max. The seed
    fixes the order in which pairs are visited.
    """
    objective = Objective(objective)
    kind = objective.integer_kind
    rng = random.Random(seed)
    current = dict(geodesic_routing(g).paths)
    cap = gamma_star(Routing(g.n, current)) + slack
    pairs = sorted(current)
    rng.shuffle(pairs)
    alternatives = {p: simple_paths(g, *p, cap)[:max_alternatives] for p in pairs}

    loads: Counter = Counter()
    lengths: Counter = Counter()
    for path in current.values():
        loads.update(zip(path, path[1:]))
        lengths[len(path) - 1] += 1

    def potential():
        top = max(loads.values())
        gs = max(k for k, c in lengths.items() if c)
        return (
            integer_value(kind, gs, top),
            sum(1 for c in loads.values() if c == top),
            sum(c * c for c in loads.values()),
        )

    def swap(old: Path, new: Path) -> None:
        loads.subtract(zip(old, old[1:]))
        loads.update(zip(new, new[1:]))
        lengths[len(old) - 1] -= 1
        lengths[len(new) - 1] += 1

    best = potential()
    evaluations = 1
    iters = 0
    improved = True
    while improved and iters < max_iters:
        improved = False
        for p in pairs:
            old = current[p]
            for cand in alternatives[p]:
                if cand == old:
                    continue
                swap(old, cand)
                evaluations += 1
                value = potential()
                if value < best:
                    best, current[p] = value, cand
                    improved = True
                    iters += 1
                    break
                swap(cand, old)
            if iters >= max_iters:
                break
    r = Routing(g.n, current)
    return SearchResult(r, objective, objective_value(g, r, objective), False, evaluations)
