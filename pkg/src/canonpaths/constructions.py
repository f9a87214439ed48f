"""Routing families: geodesics, spanning trees, and the long-path counterexamples."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .graph import Graph, GraphError, complete_graph
from .routing import Pair, Path, Routing, RoutingError, all_pairs


@dataclass(frozen=True)
class SpanningTree:
    """A spanning tree of ``host`` stored as a parent array rooted at 0."""

    host: Graph
    parent: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.host.n
        if len(self.parent) != n or self.parent[0] != -1:
            raise GraphError("parent array must have length n with root 0")
        for v in range(1, n):
            p = self.parent[v]
            if not self.host.has_edge(v, p):
                raise GraphError(f"tree edge {{{v}, {p}}} not in host graph")
        depth = [-1] * n
        depth[0] = 0
        for v in range(1, n):
            chain = []
            u = v
            while depth[u] < 0:
                if u in chain:
                    raise GraphError("parent array contains a cycle")
                chain.append(u)
                u = self.parent[u]
            for w in reversed(chain):
                depth[w] = depth[self.parent[w]] + 1
        object.__setattr__(self, "_depth", tuple(depth))

    @classmethod
    def from_edges(cls, host: Graph, edges) -> "SpanningTree":
        edges = list(edges)
        if len(edges) != host.n - 1:
            raise GraphError(f"spanning tree needs {host.n - 1} edges, got {len(edges)}")
        for u, v in edges:
            if not host.has_edge(u, v):
                raise GraphError(f"tree edge {{{u}, {v}}} not in host graph")
        tree = Graph.from_edges(host.n, edges)  # raises if disconnected
        parent = [-1] * host.n
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for u in tree.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    parent[u] = v
                    queue.append(u)
        return cls(host, tuple(parent))

    @property
    def depth(self) -> tuple[int, ...]:
        return self._depth  # type: ignore[attr-defined]

    @property
    def tree_edges(self) -> frozenset[Pair]:
        return frozenset((min(v, p), max(v, p)) for v, p in enumerate(self.parent) if p >= 0)

    def as_graph(self) -> Graph:
        return Graph.from_edges(self.host.n, sorted(self.tree_edges))

    @property
    def max_degree(self) -> int:
        deg = [0] * self.host.n
        for u, v in self.tree_edges:
            deg[u] += 1
            deg[v] += 1
        return max(deg)

    def path(self, x: int, y: int) -> Path:
        up, down = [x], [y]
        a, b = x, y
        while self.depth[a] > self.depth[b]:
            a = self.parent[a]
            up.append(a)
        while self.depth[b] > self.depth[a]:
            b = self.parent[b]
            down.append(b)
        while a != b:
            a, b = self.parent[a], self.parent[b]
            up.append(a)
            down.append(b)
        return tuple(up[:-1] + down[::-1])


# -- geodesics ---------------------------------------------------------------


def bfs_parents(g: Graph, source: int) -> list[int]:
    """BFS parent array; neighbours are scanned in ascending id order."""
    parent = [-2] * g.n
    parent[source] = -1
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if parent[u] == -2:
                parent[u] = v
                queue.append(u)
    return parent


def geodesic_routing(g: Graph) -> Routing:
    paths: dict[Pair, Path] = {}
    for x in range(g.n):
        parent = bfs_parents(g, x)
        for y in range(g.n):
            if y == x:
                continue
            chain = [y]
            while chain[-1] != x:
                chain.append(parent[chain[-1]])
            paths[(x, y)] = tuple(reversed(chain))
    return Routing(g.n, paths)


# -- spanning trees ----------------------------------------------------------


def spanning_tree_routing(g: Graph, t: SpanningTree) -> Routing:
    if t.host != g:
        raise GraphError("spanning tree belongs to a different host graph")
    return Routing(g.n, {(x, y): t.path(x, y) for x, y in all_pairs(g.n)})


def _tree_from_parent_map(g: Graph, parent: list[int], root: int) -> SpanningTree:
    edges = [(v, parent[v]) for v in range(g.n) if v != root]
    return SpanningTree.from_edges(g, edges)


def bfs_tree(g: Graph, root: int = 0) -> SpanningTree:
    return _tree_from_parent_map(g, bfs_parents(g, root), root)


def dfs_tree(g: Graph, root: int = 0) -> SpanningTree:
    parent = [-2] * g.n
    parent[root] = -1
    stack = [root]
    while stack:
        v = stack[-1]
        for u in g.neighbors(v):
            if parent[u] == -2:
                parent[u] = v
                stack.append(u)
                break
        else:
            stack.pop()
    return _tree_from_parent_map(g, parent, root)


def _require_complete(g: Graph, what: str) -> None:
    if not g.is_complete():
        raise GraphError(f"{what} requires a complete host graph")


def hamiltonian_path_tree(g: Graph) -> SpanningTree:
    _require_complete(g, "hamiltonian_path_tree")
    return SpanningTree.from_edges(g, [(i, i + 1) for i in range(g.n - 1)])


def star_tree(g: Graph, hub: int = 0) -> SpanningTree:
    _require_complete(g, "star_tree")
    return SpanningTree.from_edges(g, [(hub, v) for v in range(g.n) if v != hub])


def random_spanning_tree(g: Graph, seed: int | None = None) -> SpanningTree:
    """Uniform spanning tree via Wilson's loop-erased random walks."""
    rng = random.Random(seed)
    in_tree = [False] * g.n
    nxt = [-1] * g.n
    root = rng.randrange(g.n)
    in_tree[root] = True
    for start in rng.sample(range(g.n), g.n):
        u = start
        while not in_tree[u]:
            nxt[u] = rng.choice(g.neighbors(u))
            u = nxt[u]
        u = start
        while not in_tree[u]:
            in_tree[u] = True
            u = nxt[u]
    return SpanningTree.from_edges(g, [(v, nxt[v]) for v in range(g.n) if v != root])


# -- counterexamples on K_n --------------------------------------------------


def long_path_routing(g: Graph, long_path: Path) -> Routing:
    """Single-edge geodesics everywhere except the long path's own endpoints.

    Only meaningful on complete graphs, where every other pair is adjacent.
    """
    _require_complete(g, "long_path_routing")
    x0, y0 = long_path[0], long_path[-1]
    if x0 == y0:
        raise RoutingError("long path must join distinct endpoints")
    paths = {(x, y): (x, y) for x, y in all_pairs(g.n)}
    paths[(x0, y0)] = tuple(long_path)
    return Routing(g.n, paths)


def counterexample_routing(n: int, length: int | None = None) -> Routing:
    """K_n routing where pair ``(0, length)`` takes the path ``0, 1, ..., length``.

    The default ``length = n - 1`` is a Hamiltonian path. Every directed edge
    then carries at most two paths, so the bottleneck stays 2 for any length
    of at least 2.
    """
    if n < 3:
        raise GraphError(f"counterexample needs n >= 3, got {n}")
    if length is None:
        length = n - 1
    if not 2 <= length <= n - 1:
        raise RoutingError(f"long path length must lie in [2, {n - 1}], got {length}")
    return long_path_routing(complete_graph(n), tuple(range(length + 1)))


def eulerian_circuit(g: Graph, start: int = 0) -> Path:
    """Hierholzer's algorithm, always leaving along the lowest-id unused edge."""
    if any(g.degree(v) % 2 for v in range(g.n)):
        raise GraphError("graph has odd-degree vertices; no Eulerian circuit")
    unused = [list(row) for row in g.adjacency]  # ascending
    stack = [start]
    circuit: list[int] = []
    while stack:
        v = stack[-1]
        if unused[v]:
            u = unused[v].pop(0)
            unused[u].remove(v)
            stack.append(u)
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    return tuple(circuit)


def eulerian_trail(n: int) -> Path:
    """Eulerian circuit of K_n (odd n) or of K_{n-1} on ``0..n-2`` (even n), last edge dropped."""
    m = n if n % 2 else n - 1
    return eulerian_circuit(complete_graph(m))[:-1]


def eulerian_counterexample_routing(n: int) -> Routing:
    if n < 7:
        raise GraphError(f"Eulerian counterexample needs n >= 7, got {n}")
    return long_path_routing(complete_graph(n), eulerian_trail(n))


# -- random routings for property sweeps --------------------------------------


def random_simple_path(g: Graph, x: int, y: int, rng: random.Random) -> Path:
    """A simple path from ``x`` to ``y`` found by randomised depth-first search."""
    path = [x]
    on_path = {x}
    options = [rng.sample(g.neighbors(x), g.degree(x))]
    dead: set[int] = set()
    while path[-1] != y:
        if not options[-1]:
            v = path.pop()
            on_path.discard(v)
            options.pop()
            dead.add(v)
            continue
        u = options[-1].pop()
        if u in on_path or u in dead:
            continue
        path.append(u)
        on_path.add(u)
        options.append(rng.sample(g.neighbors(u), g.degree(u)))
    return tuple(path)


def random_routing(g: Graph, seed: int | None = None) -> Routing:
    rng = random.Random(seed)
    return Routing(g.n, {(x, y): random_simple_path(g, x, y, rng) for x, y in all_pairs(g.n)})


# -- subordination -----------------------------------------------------------


def is_subordinate(r: Routing, p: Path) -> bool:
    """True iff every subsegment of ``p`` between distinct vertices is canonical."""
    p = tuple(p)
    if r.paths.get((p[0], p[-1])) != p:
        raise RoutingError("path is not the canonical path between its endpoints")
    m = len(p) - 1
    for i in range(m):
        for j in range(i + 1, m + 1):
            if p[i] != p[j] and r.paths[(p[i], p[j])] != p[i : j + 1]:
                return False
    return True
