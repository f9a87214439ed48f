"""Canonical-path routings: one oriented trail per ordered vertex pair.

A trail may revisit vertices but never reuses an undirected edge. Load
statistics count *directed* traversals for the bottleneck number and
undirected traversals for the edge-forwarding index.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Iterable, Iterator, Mapping

from .graph import Graph

Pair = tuple[int, int]
Path = tuple[int, ...]


class RoutingError(ValueError):
    """Raised when a routing is malformed or fails validation."""


@dataclass(frozen=True)
class Violation:
    pair: Pair | None
    reason: str

    def __str__(self) -> str:
        where = f"pair {self.pair[0]}->{self.pair[1]}" if self.pair else "routing"
        return f"{where}: {self.reason}"


def path_length(path: Path) -> int:
    return len(path) - 1


def directed_steps(path: Path) -> Iterator[Pair]:
    return zip(path, path[1:])


def undirected_steps(path: Path) -> Iterator[Pair]:
    for u, v in zip(path, path[1:]):
        yield (u, v) if u < v else (v, u)


def is_trail(path: Path) -> bool:
    steps = list(undirected_steps(path))
    return len(steps) == len(set(steps))


def path_violations(g: Graph, pair: Pair, path: Path) -> list[Violation]:
    x, y = pair
    out = []
    if len(path) < 2:
        out.append(Violation(pair, "path has no edges"))
        return out
    if path[0] != x or path[-1] != y:
        out.append(Violation(pair, f"path runs {path[0]}->{path[-1]}"))
    for u, v in zip(path, path[1:]):
        if not g.has_edge(u, v):
            out.append(Violation(pair, f"{{{u}, {v}}} is not an edge"))
    seen, reported = set(), set()
    for e in undirected_steps(path):
        if e in seen and e not in reported:
            out.append(Violation(pair, f"repeated edge {{{e[0]}, {e[1]}}}"))
            reported.add(e)
        seen.add(e)
    return out


@dataclass(frozen=True)
class Routing:
    """Paths keyed by ordered pair ``(x, y)``, ``x != y``.

    Construction only normalises paths to tuples; call :func:`validate`
    against the host graph to check the trail and completeness invariants.
    """

    n: int
    paths: Mapping[Pair, Path]

    def __post_init__(self) -> None:
        object.__setattr__(self, "paths", {k: tuple(p) for k, p in self.paths.items()})

    def __getitem__(self, pair: Pair) -> Path:
        return self.paths[pair]

    def __iter__(self) -> Iterator[Pair]:
        return iter(sorted(self.paths))

    def __len__(self) -> int:
        return len(self.paths)

    def replace(self, pair: Pair, path: Iterable[int]) -> "Routing":
        paths = dict(self.paths)
        paths[pair] = tuple(path)
        return Routing(self.n, paths)

    def sorted_items(self) -> list[tuple[Pair, Path]]:
        return sorted(self.paths.items())


def all_pairs(n: int) -> Iterator[Pair]:
    for x in range(n):
        for y in range(n):
            if x != y:
                yield (x, y)


def validate(g: Graph, r: Routing) -> list[Violation]:
    """Return every violation; an empty list means the routing is valid."""
    out = []
    if r.n != g.n:
        out.append(Violation(None, f"routing is for {r.n} vertices, graph has {g.n}"))
    expected = set(all_pairs(g.n))
    for pair in sorted(expected - r.paths.keys()):
        out.append(Violation(pair, "missing pair"))
    for pair in sorted(r.paths.keys() - expected):
        out.append(Violation(pair, "not an ordered pair of distinct vertices"))
    for pair in sorted(r.paths.keys() & expected):
        out.extend(path_violations(g, pair, r.paths[pair]))
    return out


def check(g: Graph, r: Routing) -> Routing:
    errs = validate(g, r)
    if errs:
        raise RoutingError("; ".join(map(str, errs[:10])))
    return r


# -- statistics --------------------------------------------------------------


def gamma_star(r: Routing) -> int:
    return max(path_length(p) for p in r.paths.values())


def directed_loads(r: Routing) -> Counter:
    loads: Counter = Counter()
    for p in r.paths.values():
        loads.update(directed_steps(p))
    return loads


def undirected_loads(r: Routing) -> Counter:
    # a trail using both orientations of one edge is impossible, so each path
    # contributes at most once per undirected edge
    loads: Counter = Counter()
    for p in r.paths.values():
        loads.update(undirected_steps(p))
    return loads


def bottleneck(r: Routing) -> int:
    return max(directed_loads(r).values())


def forwarding_index(r: Routing) -> int:
    return max(undirected_loads(r).values())


def total_length(r: Routing) -> int:
    return sum(path_length(p) for p in r.paths.values())


def average_length(r: Routing) -> Fraction:
    """Mean length over all ``n**2`` ordered pairs, diagonal pairs counting as 0."""
    return Fraction(total_length(r), r.n * r.n)


def pigeonhole_floor(r: Routing, g: Graph) -> int:
    return ceil(Fraction(total_length(r), 2 * g.edge_count))


# -- text format -------------------------------------------------------------


def parse_routing(text: str, n: int) -> Routing:
    """Parse lines of the form ``x y : v0 v1 ... vm``."""
    paths: dict[Pair, Path] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise RoutingError(f"line {lineno}: missing ':'")
        try:
            ends = tuple(int(t) for t in head.split())
            verts = tuple(int(t) for t in tail.split())
        except ValueError:
            raise RoutingError(f"line {lineno}: non-integer vertex id") from None
        if len(ends) != 2:
            raise RoutingError(f"line {lineno}: expected 'x y' before ':'")
        if ends in paths:
            raise RoutingError(f"line {lineno}: pair {ends[0]}->{ends[1]} given twice")
        paths[ends] = verts
    return Routing(n, paths)


def format_routing(r: Routing) -> str:
    return "".join(
        f"{x} {y} : {' '.join(map(str, p))}\n" for (x, y), p in r.sorted_items()
    )
