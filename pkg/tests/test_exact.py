import numpy as np
import pytest

from trisample import count_exact, local_edge_count

from conftest import (
    PAW_EDGES,
    brute_force_local_counts,
    brute_force_triangles,
    gnp_edges,
    gnp_graph,
)
from trisample import Graph


def test_k3_profile(k3):
    prof = count_exact(k3)
    assert prof.total == 1
    assert list(prof.per_vertex) == [1, 1, 1]
    assert all(c == 1 for c in prof.per_edge.values())


def test_k4_profile(k4):
    prof = count_exact(k4)
    assert prof.total == 4
    assert list(prof.per_vertex) == [3, 3, 3, 3]
    assert all(c == 2 for c in prof.per_edge.values())


def test_paw_profile_matches_brute_force(paw):
    expected_vertex, expected_edge = brute_force_local_counts(4, PAW_EDGES)
    prof = count_exact(paw)
    assert prof.total == brute_force_triangles(4, PAW_EDGES) == 1
    assert list(prof.per_vertex) == expected_vertex == [1, 1, 1, 0]
    assert prof.per_edge == expected_edge
    assert prof.edge_count(2, 3) == 0


def test_local_edge_count(k4, paw):
    assert local_edge_count(k4, 0, 1) == 2
    assert local_edge_count(paw, 2, 3) == 0
    assert local_edge_count(paw, 0, 3) == 0  # non-edge
    assert local_edge_count(paw, 3, 0) == 0
    with pytest.raises(ValueError):
        local_edge_count(paw, 1, 1)
    with pytest.raises(IndexError):
        local_edge_count(paw, 0, 9)


def test_profile_identities_on_random_graphs():
    rng = np.random.default_rng(5)
    for _ in range(40):
        n = int(rng.integers(2, 30))
        g = gnp_graph(n, float(rng.uniform(0.2, 0.5)), rng)
        prof = count_exact(g)
        assert 3 * prof.total == int(prof.per_vertex.sum())
        for i in range(n):
            incident = sum(prof.edge_count(i, j) for j in g.neighbors(i))
            assert incident == 2 * int(prof.per_vertex[i])
        assert all(c >= 0 for c in prof.per_edge.values())


def test_total_matches_independent_enumeration():
    rng = np.random.default_rng(17)
    for _ in range(30):
        n = int(rng.integers(3, 30))
        edges = gnp_edges(n, float(rng.uniform(0.2, 0.5)), rng)
        g = Graph.from_edges(edges, n=n)
        assert count_exact(g).total == brute_force_triangles(n, edges)


def test_per_edge_matches_independent_counts():
    rng = np.random.default_rng(23)
    for _ in range(10):
        n = int(rng.integers(3, 20))
        edges = gnp_edges(n, 0.4, rng)
        g = Graph.from_edges(edges, n=n)
        expected_vertex, expected_edge = brute_force_local_counts(n, edges)
        prof = count_exact(g)
        assert list(prof.per_vertex) == expected_vertex
        assert prof.per_edge == expected_edge
