"""Named graph families with fixed canonical vertex orderings."""
from __future__ import annotations

from itertools import combinations, product
from math import comb

from .config import limits
from .errors import InvalidParameter, SizeLimit
from .graph import Graph


def _cap(order: int, what: str) -> None:
    if order > limits.max_n:
        raise SizeLimit(f"{what} has {order} vertices, cap is {limits.max_n}")


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"path needs n >= 1, got {n}")
    _cap(n, "path")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter(f"cycle needs n >= 3, got {n}")
    _cap(n, "cycle")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"complete graph needs n >= 1, got {n}")
    _cap(n, "complete graph")
    return Graph.from_edges(n, combinations(range(n), 2), f"K{n}")


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InvalidParameter(f"complete bipartite needs parts >= 1, got ({a}, {b})")
    _cap(a + b, "complete bipartite graph")
    return Graph.from_edges(
        a + b, [(i, a + j) for i in range(a) for j in range(b)], f"K{a},{b}"
    )


def hamming(n: int, k: int) -> Graph:
    """H(n, k): tuples over ``1..k`` in lexicographic order, adjacent iff they
    differ in exactly one coordinate."""
    if n < 1 or k < 2:
        raise InvalidParameter(f"hamming needs n >= 1 and k >= 2, got ({n}, {k})")
    _cap(k**n, f"H({n},{k})")
    # index of tuple t is sum (t_i - 1) * k^(n-1-i)
    edges = []
    for idx in range(k**n):
        for pos in range(n):
            weight = k ** (n - 1 - pos)
            digit = (idx // weight) % k
            for other in range(digit + 1, k):
                edges.append((idx, idx + (other - digit) * weight))
    labels = ["(" + ",".join(map(str, t)) + ")" for t in product(range(1, k + 1), repeat=n)]
    return Graph.from_edges(k**n, edges, f"H({n},{k})", labels)


def hypercube(n: int) -> Graph:
    g = hamming(n, 2)
    return g.relabel(f"Q{n}")


def johnson(n: int, k: int) -> Graph:
    """J(n, k): k-subsets of ``1..n`` in lexicographic order, adjacent iff
    they share k-1 elements."""
    if not 1 <= k <= n - 1:
        raise InvalidParameter(f"johnson needs 1 <= k <= n-1, got ({n}, {k})")
    _cap(comb(n, k), f"J({n},{k})")
    subsets = [frozenset(s) for s in combinations(range(1, n + 1), k)]
    edges = [
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if len(subsets[i] & subsets[j]) == k - 1
    ]
    labels = ["{" + ",".join(map(str, sorted(s))) + "}" for s in subsets]
    return Graph.from_edges(len(subsets), edges, f"J({n},{k})", labels)


def parse_label_set(label: str) -> frozenset[int]:
    return frozenset(int(x) for x in label.strip("{}").split(",") if x)


def parse_label_tuple(label: str) -> tuple[int, ...]:
    return tuple(int(x) for x in label.strip("()").split(","))
