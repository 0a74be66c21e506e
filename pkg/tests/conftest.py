from itertools import combinations

import pytest
from hypothesis import strategies as st

from fracdim.graph import Graph


def floyd_warshall(g: Graph) -> list[list[float]]:
    """Independent distance oracle (no BFS)."""
    inf = float("inf")
    d = [[0 if i == j else (1 if g.has_edge(i, j) else inf) for j in range(g.n)] for i in range(g.n)]
    for k in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def naive_rset(d, x, y) -> set[int]:
    return {z for z in range(len(d)) if d[x][z] != d[y][z]}


def brute_dim(g: Graph) -> int:
    d = floyd_warshall(g)
    for k in range(1, g.n + 1):
        for w in combinations(range(g.n), k):
            if len({tuple(d[v][x] for x in w) for v in range(g.n)}) == g.n:
                return k
    raise AssertionError


@st.composite
def connected_graphs(draw, min_n=2, max_n=7):
    """Random spanning tree plus random extra edges; labels shuffled by the tree draw."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    for u, v in extra:
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges), f"hyp(n={n})")


@pytest.fixture
def k23():
    from fracdim.generators import complete_bipartite

    return complete_bipartite(2, 3)
