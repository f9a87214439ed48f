"""Canonical-path Poincare and Cheeger bounds for simple random walk on graphs."""

from .graph import Graph, GraphError, complete_graph, cycle_graph, path_graph, star_graph
from .routing import Routing, RoutingError, bottleneck, gamma_star, validate
from .bounds import compare

__all__ = [
    "Graph",
    "GraphError",
    "Routing",
    "RoutingError",
    "bottleneck",
    "compare",
    "complete_graph",
    "cycle_graph",
    "gamma_star",
    "path_graph",
    "star_graph",
    "validate",
]
