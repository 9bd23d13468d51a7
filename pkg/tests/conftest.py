import itertools

import numpy as np
import pytest

from trisample import Graph

PAW_EDGES = [(0, 1), (0, 2), (1, 2), (2, 3)]
K3_EDGES = [(0, 1), (0, 2), (1, 2)]
K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
PATH3_EDGES = [(0, 1), (1, 2)]  # triangle-free


@pytest.fixture
def paw() -> Graph:
    return Graph.from_edges(PAW_EDGES)


@pytest.fixture
def k3() -> Graph:
    return Graph.from_edges(K3_EDGES)


@pytest.fixture
def k4() -> Graph:
    return Graph.from_edges(K4_EDGES)


@pytest.fixture
def path3() -> Graph:
    return Graph.from_edges(PATH3_EDGES)


def gnp_edges(n: int, p: float, rng: np.random.Generator) -> list[tuple[int, int]]:
    """Erdos-Renyi edge list; vectorized so big test graphs stay cheap."""
    iu, ju = np.triu_indices(n, k=1)
    mask = rng.random(iu.size) < p
    return list(zip(iu[mask].tolist(), ju[mask].tolist()))


def gnp_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    return Graph.from_edges(gnp_edges(n, p, rng), n=n)


def brute_force_triangles(n: int, edges: list[tuple[int, int]]) -> int:
    """Independent triple-enumeration oracle, built straight from the edge list."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    count = 0
    for a, b, c in itertools.combinations(range(n), 3):
        if b in adj[a] and c in adj[a] and c in adj[b]:
            count += 1
    return count


def brute_force_local_counts(n: int, edges: list[tuple[int, int]]):
    """Independent per-vertex / per-edge local counts from the raw edge list."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    per_vertex = [0] * n
    per_edge = {}
    for u, v in edges:
        key = (min(u, v), max(u, v))
        per_edge[key] = sum(1 for d in range(n) if d in adj[u] and d in adj[v])
    for a, b, c in itertools.combinations(range(n), 3):
        if b in adj[a] and c in adj[a] and c in adj[b]:
            per_vertex[a] += 1
            per_vertex[b] += 1
            per_vertex[c] += 1
    return per_vertex, per_edge
