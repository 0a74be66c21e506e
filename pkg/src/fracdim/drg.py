"""Intersection numbers of distance-regular graphs and the closed forms built
on the equidistant counts ``sum_i p^h_{i,i}``."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import DegenerateGraph, IndexOutOfRange, InvalidParameter
from .graph import DistanceMatrix, Graph, distance_matrix


@lru_cache(maxsize=None)
def _pascal_row(m: int) -> tuple[int, ...]:
    if m == 0:
        return (1,)
    prev = _pascal_row(m - 1)
    return (1,) + tuple(prev[i] + prev[i + 1] for i in range(m - 1)) + (1,)


def binom(m: int, k: int) -> int:
    """Binomial coefficient from the Pascal triangle; zero outside ``0 <= k <= m``."""
    if m < 0 or k < 0 or k > m:
        return 0
    return _pascal_row(m)[k]


@dataclass(frozen=True, eq=False)
class IntersectionNumbers:
    diameter: int
    p: tuple[tuple[tuple[int, ...], ...], ...]  # p[h][i][j]

    def sphere_size(self, i: int) -> int:
        return self.p[0][i][i]

    def intersection_array(self) -> tuple[list[int], list[int]]:
        """``(b_0..b_{d-1}, c_1..c_d)`` with ``b_i = p^i_{1,i+1}``, ``c_i = p^i_{1,i-1}``."""
        d = self.diameter
        b = [self.p[i][1][i + 1] for i in range(d)]
        c = [self.p[i][1][i - 1] for i in range(1, d + 1)]
        return b, c


def is_distance_regular(g: Graph, dm: Optional[DistanceMatrix] = None) -> Optional[IntersectionNumbers]:
    """The intersection table if every pair at each distance has identical
    counts, else ``None``. All pairs are checked, not a representative."""
    dm = dm if dm is not None else distance_matrix(g)
    d = dm.d
    diam = dm.diameter
    size = diam + 1
    table: list[Optional[np.ndarray]] = [None] * size
    for x in range(g.n):
        for y in range(x, g.n):
            h = int(d[x, y])
            counts = np.bincount(d[x] * size + d[y], minlength=size * size).reshape(size, size)
            if table[h] is None:
                table[h] = counts
            elif not np.array_equal(table[h], counts):
                return None
    # the (y, x) orientation has the transposed table; constancy needs symmetry
    for h in range(size):
        if not np.array_equal(table[h], table[h].T):
            return None
    p = tuple(tuple(tuple(int(v) for v in row) for row in table[h]) for h in range(size))
    return IntersectionNumbers(diam, p)


def pii_sum(table: IntersectionNumbers, h: int) -> int:
    """``sum_{i=1}^{d} p^h_{i,i}``: vertices equidistant from a distance-h pair."""
    if not 1 <= h <= table.diameter:
        raise IndexOutOfRange(f"h={h} outside 1..{table.diameter}")
    return sum(table.p[h][i][i] for i in range(1, table.diameter + 1))


def max_pii_sum(table: IntersectionNumbers) -> tuple[int, int]:
    """(max over h of the equidistant count, smallest h attaining it)."""
    best, arg = -1, 0
    for h in range(1, table.diameter + 1):
        s = pii_sum(table, h)
        if s > best:
            best, arg = s, h
    return best, arg


def drg_fracdim(table: IntersectionNumbers, order: int) -> Fraction:
    """``|V| / (|V| - max_h sum_i p^h_{i,i})`` for a vertex-transitive DRG."""
    top, _ = max_pii_sum(table)
    if top >= order:
        raise DegenerateGraph(f"equidistant count {top} reaches the order {order}")
    return Fraction(order, order - top)


def drg_dim_bound(table: IntersectionNumbers, order: Optional[int] = None) -> int:
    """Upper bound ``max_h sum_i p^h_{i,i} + 1`` on the metric dimension."""
    return max_pii_sum(table)[0] + 1


def hamming_pii_sum(n: int, k: int, h: int) -> int:
    if k < 2 or not 1 <= h <= n:
        raise InvalidParameter(f"need k >= 2 and 1 <= h <= n, got n={n}, k={k}, h={h}")
    return sum(
        binom(h, 2 * s) * binom(2 * s, s) * (k - 2) ** (h - 2 * s) * k ** (n - h)
        for s in range(h // 2 + 1)
    )


def johnson_pii_sum(n: int, k: int, h: int) -> int:
    if not 1 <= h <= k <= n - 1:
        raise InvalidParameter(f"need 1 <= h <= k <= n-1, got n={n}, k={k}, h={h}")
    return sum(binom(h, s) ** 2 * binom(n - 2 * h, k - 2 * s) for s in range(h + 1))


def johnson_h1_sum(n: int, k: int) -> int:
    return binom(n - 2, k) + binom(n - 2, k - 2)


def equidistant_count(dm: DistanceMatrix, x: int, y: int) -> int:
    """Brute-force count of vertices ``z`` with ``d(x, z) = d(y, z)``."""
    return int(np.count_nonzero(dm.d[x] == dm.d[y]))


# --- inequalities used inside the closed-form derivations -----------------


def hamming_sum_inequality_holds(n: int, k: int) -> bool:
    """Equidistant counts at h >= 2 never exceed the h = 1 value (k-2) k^(n-1)."""
    bound = (k - 2) * k ** (n - 1)
    return all(hamming_pii_sum(n, k, h) <= bound for h in range(2, n + 1))


def johnson_sum_inequality_holds(n: int, k: int) -> bool:
    """Equidistant counts at 2 <= h <= k never exceed the h = 1 value."""
    bound = johnson_h1_sum(n, k)
    return all(johnson_pii_sum(n, k, h) <= bound for h in range(2, k + 1))


def binomial_neighbour_inequality_holds(m: int, k: int) -> bool:
    """``C(m, k+1) + C(m, k-1) >= C(m, k)``."""
    return binom(m, k + 1) + binom(m, k - 1) >= binom(m, k)
