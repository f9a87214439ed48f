"""Simple connected undirected graphs and the families used in the experiments.

Vertices are dense 0-based integer ids. A :class:`Graph` is validated once at
construction (simple, symmetric, connected) and is immutable afterwards.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Raised for malformed, non-simple or disconnected graph input."""


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edge_count: int = field(init=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError("graph needs at least one vertex")
        if len(self.adjacency) != self.n:
            raise GraphError(f"adjacency has {len(self.adjacency)} rows, expected {self.n}")
        adj = tuple(tuple(sorted(row)) for row in self.adjacency)
        for v, row in enumerate(adj):
            if len(set(row)) != len(row):
                raise GraphError(f"duplicate edge at vertex {v}")
            for u in row:
                if not 0 <= u < self.n:
                    raise GraphError(f"vertex {u} out of range")
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
        sets = [set(row) for row in adj]
        for v, row in enumerate(adj):
            for u in row:
                if v not in sets[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "edge_count", sum(map(len, adj)) // 2)
        object.__setattr__(self, "_sets", tuple(frozenset(s) for s in sets))
        if len(_bfs_order(adj, 0)) != self.n:
            raise GraphError("graph is disconnected")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {{{key[0]}, {key[1]}}}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            seen.add(key)
            rows[u].append(v)
            rows[v].append(u)
        return cls(n, tuple(tuple(r) for r in rows))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._sets[u]  # type: ignore[attr-defined]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Undirected edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, row in enumerate(self.adjacency):
            for v in row:
                if u < v:
                    yield (u, v)

    def directed_edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.adjacency):
            for v in row:
                yield (u, v)

    @property
    def max_degree(self) -> int:
        return max_degree(self)

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def is_tree(self) -> bool:
        return self.edge_count == self.n - 1


def _bfs_order(adj, source: int) -> list[int]:
    seen = [False] * len(adj)
    seen[source] = True
    order = [source]
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if not seen[u]:
                seen[u] = True
                order.append(u)
                queue.append(u)
    return order


def max_degree(g: Graph) -> int:
    return max(len(row) for row in g.adjacency)


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def distance_matrix(g: Graph) -> list[list[int]]:
    return [bfs_distances(g, s) for s in range(g.n)]


def diameter(g: Graph) -> int:
    return max(max(row) for row in distance_matrix(g))


# -- edge-list text format ---------------------------------------------------


def from_edge_list(text: str) -> Graph:
    """Parse the whitespace edge-list format.

    One edge per line as two decimal ids; blank lines and lines starting with
    ``#`` are skipped. The vertex count is one more than the largest id, so an
    unused id leaves an isolated vertex and the graph is rejected as
    disconnected.
    """
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two vertex ids, got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex id in {raw!r}") from None
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex id")
        edges.append((u, v))
    if not edges:
        raise GraphError("empty edge list")
    n = 1 + max(max(e) for e in edges)
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


# -- generators --------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    if n < 2:
        raise GraphError(f"complete graph needs n >= 2, got {n}")
    return Graph(n, tuple(tuple(u for u in range(n) if u != v) for v in range(n)))


def path_graph(n: int) -> Graph:
    if n < 2:
        raise GraphError(f"path graph needs n >= 2, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle graph needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices with hub 0."""
    if n < 2:
        raise GraphError(f"star graph needs n >= 2, got {n}")
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def random_tree(n: int, seed: int | None = None) -> Graph:
    """Random tree by attaching each vertex to a uniformly chosen earlier one."""
    if n < 2:
        raise GraphError(f"tree needs n >= 2, got {n}")
    rng = random.Random(seed)
    return Graph.from_edges(n, ((rng.randrange(v), v) for v in range(1, n)))


def random_connected_graph(n: int, edge_probability: float, seed: int | None = None) -> Graph:
    """Erdos-Renyi sample, patched to connectivity by joining components at random."""
    if n < 2:
        raise GraphError(f"graph needs n >= 2, got {n}")
    if not 0.0 <= edge_probability <= 1.0:
        raise GraphError(f"edge probability {edge_probability} outside [0, 1]")
    rng = random.Random(seed)
    edges = {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < edge_probability}

    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    while True:
        roots = sorted({find(v) for v in range(n)})
        if len(roots) == 1:
            break
        a, b = rng.sample(roots, 2)
        u = rng.choice([v for v in range(n) if find(v) == a])
        v = rng.choice([w for w in range(n) if find(w) == b])
        edges.add((min(u, v), max(u, v)))
        parent[a] = b
    return Graph.from_edges(n, sorted(edges))
