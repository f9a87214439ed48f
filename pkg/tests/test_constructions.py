import pytest
from hypothesis import given

from canonpaths.bounds import cut_products
from canonpaths.constructions import (
    SpanningTree,
    bfs_tree,
    counterexample_routing,
    dfs_tree,
    eulerian_circuit,
    eulerian_counterexample_routing,
    eulerian_trail,
    geodesic_routing,
    hamiltonian_path_tree,
    is_subordinate,
    long_path_routing,
    random_routing,
    random_spanning_tree,
    spanning_tree_routing,
    star_tree,
)
from canonpaths.graph import (
    GraphError,
    bfs_distances,
    complete_graph,
    cycle_graph,
    diameter,
    path_graph,
    star_graph,
)
from canonpaths.routing import RoutingError, bottleneck, gamma_star, is_trail, validate

from oracles import traversal_counts
from strategies import graphs, seeds, trees


def test_geodesics_on_complete_graph():
    r = geodesic_routing(complete_graph(6))
    assert all(len(p) == 2 for p in r.paths.values())
    assert gamma_star(r) == bottleneck(r) == 1


def test_geodesics_on_tree_are_unique_paths():
    r = geodesic_routing(path_graph(3))
    assert r[(0, 2)] == (0, 1, 2)
    assert gamma_star(r) == 2


def test_geodesic_tie_break_on_c4():
    # BFS from 0 discovers 1 before 3, so 1 becomes the parent of 2
    assert geodesic_routing(cycle_graph(4))[(0, 2)] == (0, 1, 2)
    assert geodesic_routing(cycle_graph(4))[(1, 3)] == (1, 0, 3)


def test_star_tree_routing_on_k5():
    g = complete_graph(5)
    r = spanning_tree_routing(g, star_tree(g, 0))
    assert (gamma_star(r), bottleneck(r)) == (2, 4)
    assert r[(3, 1)] == (3, 0, 1)


@pytest.mark.parametrize("m", range(1, 7))
def test_hamiltonian_tree_on_odd_complete_graph(m):
    n = 2 * m + 1
    g = complete_graph(n)
    r = spanning_tree_routing(g, hamiltonian_path_tree(g))
    assert gamma_star(r) == n - 1
    # central edge separates (n-1)/2 vertices from (n+1)/2
    assert bottleneck(r) == (n * n - 1) // 4 == max(traversal_counts(r.paths.values()).values())


def test_tree_graph_with_itself_gives_unique_routing():
    t = star_graph(6)
    assert spanning_tree_routing(t, bfs_tree(t)).paths == geodesic_routing(t).paths


def test_tree_builders():
    k7 = complete_graph(7)
    assert star_tree(k7, 0).max_degree == 6
    assert hamiltonian_path_tree(k7).max_degree == 2
    p4 = path_graph(4)
    assert bfs_tree(p4, 0).tree_edges == frozenset(p4.edges())
    assert dfs_tree(p4, 2).tree_edges == frozenset(p4.edges())
    assert dfs_tree(k7).tree_edges == hamiltonian_path_tree(k7).tree_edges
    with pytest.raises(GraphError, match="complete"):
        star_tree(cycle_graph(5))
    with pytest.raises(GraphError, match="complete"):
        hamiltonian_path_tree(path_graph(3))


def test_spanning_tree_validation():
    g = cycle_graph(4)
    with pytest.raises(GraphError, match="not in host"):
        SpanningTree.from_edges(g, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(GraphError, match="needs 3 edges"):
        SpanningTree.from_edges(g, [(0, 1), (1, 2)])
    with pytest.raises(GraphError, match="different host"):
        spanning_tree_routing(complete_graph(4), bfs_tree(g))


@pytest.mark.parametrize(
    "n, lhs, rhs",
    [
        (17, 4 * 16**2 * 2, 16 * 136),  # 2048 < 2176
        (16, 4 * 15**2 * 2, 15 * 120),  # 1800 = 1800
    ],
)
def test_counterexample_products(n, lhs, rhs):
    g = complete_graph(n)
    r = counterexample_routing(n)
    d = g.max_degree
    assert (gamma_star(r), bottleneck(r)) == (n - 1, 2)
    assert (4 * d * d * bottleneck(r), gamma_star(r) * g.edge_count) == (lhs, rhs)


def test_counterexample_small_and_errors():
    r = counterexample_routing(3)
    assert (gamma_star(r), bottleneck(r)) == (2, 2)
    assert r[(0, 2)] == (0, 1, 2)
    with pytest.raises(GraphError):
        counterexample_routing(2)
    with pytest.raises(RoutingError):
        counterexample_routing(6, length=1)


@pytest.mark.parametrize("n", range(3, 30))
def test_counterexample_shape(n):
    r = counterexample_routing(n)
    assert validate(complete_graph(n), r) == []
    assert (gamma_star(r), bottleneck(r)) == (n - 1, 2)


@pytest.mark.parametrize("n", [17, 20, 33])
def test_shorter_long_path_threshold(n):
    """Any long path longer than 16 (n - 1) / n with geodesics elsewhere already loses."""
    g = complete_graph(n)
    d, e = g.max_degree, g.edge_count
    for length in range(2, n):
        r = counterexample_routing(n, length)
        assert bottleneck(r) == 2
        loses = 4 * d * d * 2 < length * e
        assert loses == (length * n > 16 * (n - 1))


def test_eulerian_circuit_k5():
    c = eulerian_circuit(complete_graph(5))
    assert c[0] == c[-1] == 0
    assert len(c) == 11
    assert is_trail(c)
    with pytest.raises(GraphError, match="odd-degree"):
        eulerian_circuit(complete_graph(4))


def test_eulerian_routing_n7():
    g = complete_graph(7)
    r = eulerian_counterexample_routing(7)
    assert validate(g, r) == []
    assert (gamma_star(r), bottleneck(r)) == (20, 2)
    assert 4 * 36 * 2 == 288 < 420 == 20 * g.edge_count


def test_eulerian_routing_n8_uses_k7_subgraph():
    g = complete_graph(8)
    trail = eulerian_trail(8)
    assert max(trail) == 6
    r = eulerian_counterexample_routing(8)
    assert validate(g, r) == []
    assert gamma_star(r) == 20
    assert 4 * 49 * bottleneck(r) < gamma_star(r) * g.edge_count


def test_eulerian_errors():
    with pytest.raises(GraphError):
        eulerian_counterexample_routing(6)
    with pytest.raises(GraphError, match="complete"):
        long_path_routing(cycle_graph(5), (0, 1, 2))


def test_subordinate_examples():
    g = complete_graph(5)
    r = spanning_tree_routing(g, hamiltonian_path_tree(g))
    assert all(is_subordinate(r, p) for p in r.paths.values())
    long = counterexample_routing(17)
    assert not is_subordinate(long, long[(0, 16)])
    # the interior pair (0, 2) takes the edge, not the segment 0, 1, 2
    assert long[(0, 2)] == (0, 2)
    assert is_subordinate(long, long[(3, 4)])
    with pytest.raises(RoutingError):
        is_subordinate(long, (0, 1, 2))


@given(graphs(), seeds)
def test_constructed_routings_validate(g, seed):
    for r in (
        geodesic_routing(g),
        random_routing(g, seed),
        spanning_tree_routing(g, random_spanning_tree(g, seed)),
        spanning_tree_routing(g, dfs_tree(g)),
    ):
        assert validate(g, r) == []


@given(graphs())
def test_geodesic_lengths_are_distances(g):
    r = geodesic_routing(g)
    for x in range(g.n):
        dist = bfs_distances(g, x)
        for y in range(g.n):
            if x != y:
                assert len(r[(x, y)]) - 1 == dist[y]
    assert gamma_star(r) == diameter(g)


@given(graphs(), seeds)
def test_spanning_tree_routing_is_subordinate_with_cut_product_bottleneck(g, seed):
    t = random_spanning_tree(g, seed)
    r = spanning_tree_routing(g, t)
    assert all(is_subordinate(r, p) for p in r.paths.values())
    # each direction of a tree edge carries k (n - k) paths
    assert bottleneck(r) == max(cut_products(t.as_graph()).values())


@given(trees())
def test_tree_cut_products_match_traversal_counts(t):
    r = geodesic_routing(t)
    counts = traversal_counts(r.paths.values())
    cuts = cut_products(t)
    for (u, v), k in cuts.items():
        assert counts[(u, v)] == counts[(v, u)] == k


def test_random_spanning_tree_is_deterministic():
    g = complete_graph(8)
    assert random_spanning_tree(g, 4) == random_spanning_tree(g, 4)
