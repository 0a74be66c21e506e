"""Resolved-pair sets R{x,y}, resolving sets and exact metric dimension.

Vertex subsets are Python ints used as bitsets (bit ``v`` set iff ``v`` is in
the subset), so there is no word-size ceiling.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

import numpy as np

from .config import limits
from .errors import EqualVertices, SizeLimit
from .graph import DistanceMatrix, Graph, distance_matrix


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def _pack_rows(bools: np.ndarray) -> list[int]:
    packed = np.packbits(bools, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def r_set(dm: DistanceMatrix, x: int, y: int) -> int:
    """Bitset of vertices ``z`` with ``d(x, z) != d(y, z)``."""
    if x == y:
        raise EqualVertices(f"R{{x,y}} needs distinct vertices, got {x} twice")
    return _pack_rows((dm.d[x] != dm.d[y])[None, :])[0]


@dataclass(frozen=True, eq=False)
class ResolutionSystem:
    n: int
    pairs: tuple[tuple[int, int], ...]
    rsets: tuple[int, ...]
    # (bitset, multiplicity) in order of first appearance
    distinct_rsets: tuple[tuple[int, int], ...]

    def rset(self, x: int, y: int) -> int:
        if x == y:
            raise EqualVertices(f"R{{x,y}} needs distinct vertices, got {x} twice")
        if x > y:
            x, y = y, x
        # pairs are in lexicographic order
        idx = x * (2 * self.n - x - 1) // 2 + (y - x - 1)
        return self.rsets[idx]

    def vertex_covers(self) -> list[int]:
        """For each vertex, the bitset of pair indices it resolves."""
        covers = [0] * self.n
        for p, rs in enumerate(self.rsets):
            bit = 1 << p
            for v in members(rs):
                covers[v] |= bit
        return covers


def resolution_system(g: Graph, dm: Optional[DistanceMatrix] = None) -> ResolutionSystem:
    dm = dm if dm is not None else distance_matrix(g)
    n = g.n
    d = dm.d
    pairs = []
    rsets: list[int] = []
    for x in range(n - 1):
        neq = d[x][None, :] != d[x + 1 :]
        rsets.extend(_pack_rows(neq))
        pairs.extend((x, y) for y in range(x + 1, n))
    counts: dict[int, int] = {}
    for rs in rsets:
        counts[rs] = counts.get(rs, 0) + 1
    return ResolutionSystem(n, tuple(pairs), tuple(rsets), tuple(counts.items()))


def r_min(g: Graph, sys: Optional[ResolutionSystem] = None) -> tuple[int, tuple[int, int]]:
    """Smallest |R{x,y}| and the lexicographically least pair attaining it."""
    sys = sys if sys is not None else resolution_system(g)
    if not sys.pairs:
        raise ValueError("r(G) needs at least two vertices")
    best = None
    best_pair = None
    for pair, rs in zip(sys.pairs, sys.rsets):
        size = rs.bit_count()
        if best is None or size < best:
            best, best_pair = size, pair
    return best, best_pair


def is_resolving_set(sys: ResolutionSystem, w: Iterable[int] | int) -> bool:
    mask = w if isinstance(w, int) else to_mask(w)
    return all(rs & mask for rs in sys.rsets)


def _greedy_cover(covers: list[int], universe: int) -> int:
    size = 0
    left = universe
    while left:
        v = max(range(len(covers)), key=lambda u: ((covers[u] & left).bit_count(), -u))
        left &= ~covers[v]
        size += 1
    return size


def _min_cover_size(covers: list[int], rsets: list[int], universe: int) -> int:
    """Branch and bound for the minimum number of vertices covering all pairs.

    Branches on the uncovered pair with fewest eligible resolvers; a vertex
    tried and rejected on one branch is excluded from its later siblings.
    """
    n = len(covers)
    best = _greedy_cover(covers, universe)

    def lower_bound(left: int, allowed: int) -> int:
        top = 0
        cnt = left.bit_count()
        for v in range(n):
            if allowed >> v & 1:
                c = (covers[v] & left).bit_count()
                if c > top:
                    top = c
        if top == 0:
            return n + 1
        return -(-cnt // top)

    def search(left: int, allowed: int, depth: int) -> None:
        nonlocal best
        if not left:
            if depth < best:
                best = depth
            return
        if depth + lower_bound(left, allowed) >= best:
            return
        # most constrained uncovered pair
        pick = None
        pick_size = n + 1
        rest = left
        while rest:
            low = rest & -rest
            p = low.bit_length() - 1
            rest ^= low
            s = (rsets[p] & allowed).bit_count()
            if s < pick_size:
                pick, pick_size = p, s
                if s <= 1:
                    break
        if pick_size == 0:
            return
        cands = members(rsets[pick] & allowed)
        cands.sort(key=lambda v: (-(covers[v] & left).bit_count(), v))
        for v in cands:
            search(left & ~covers[v], allowed & ~(1 << v), depth + 1)
            allowed &= ~(1 << v)
            if depth + 1 >= best:
                return

    search(universe, (1 << n) - 1, 0)
    return best


def _lex_least_cover(covers: list[int], universe: int, k: int) -> list[int]:
    n = len(covers)
    suffix = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        suffix[v] = suffix[v + 1] | covers[v]

    def dfs(start: int, left: int, chosen: list[int]) -> Optional[list[int]]:
        if not left:
            return list(chosen)
        room = k - len(chosen)
        if room == 0 or (left & ~suffix[start]):
            return None
        top = max((covers[v] & left).bit_count() for v in range(start, n))
        if top * room < left.bit_count():
            return None
        for v in range(start, n):
            if left & ~suffix[v]:
                break
            chosen.append(v)
            found = dfs(v + 1, left & ~covers[v], chosen)
            chosen.pop()
            if found is not None:
                return found
        return None

    found = dfs(0, universe, [])
    assert found is not None and len(found) == k
    return found


def metric_dimension(g: Graph, sys: Optional[ResolutionSystem] = None) -> tuple[int, list[int]]:
    """Exact dim(G) with the lexicographically least minimum resolving set."""
    if g.n > limits.metric_dim_n:
        raise SizeLimit(f"metric dimension capped at n={limits.metric_dim_n}, got {g.n}")
    if g.n < 2:
        raise ValueError("metric dimension needs at least two vertices")
    sys = sys if sys is not None else resolution_system(g)
    covers = sys.vertex_covers()
    universe = (1 << len(sys.pairs)) - 1
    k = _min_cover_size(covers, list(sys.rsets), universe)
    return k, _lex_least_cover(covers, universe, k)


def metric_dimension_bruteforce(g: Graph, sys: Optional[ResolutionSystem] = None) -> tuple[int, list[int]]:
    """Subset enumeration by increasing size; the reference for small graphs."""
    sys = sys if sys is not None else resolution_system(g)
    for k in range(1, g.n + 1):
        for w in combinations(range(g.n), k):
            if is_resolving_set(sys, w):
                return k, list(w)
    raise AssertionError("the full vertex set always resolves")


def distance_vectors_distinct(dm: DistanceMatrix, w: Iterable[int]) -> bool:
    cols = list(w)
    vecs = {tuple(int(x) for x in dm.d[v, cols]) for v in range(dm.n)}
    return len(vecs) == dm.n


def minimal_rows(rows: Iterable[int]) -> list[int]:
    """Distinct bitsets with every strict superset of another one removed."""
    kept: list[int] = []
    for r in sorted(set(rows), key=lambda m: (m.bit_count(), m)):
        if not any(k & r == k for k in kept):
            kept.append(r)
    return kept


def check_lemma_3_1(g: Graph, sys: Optional[ResolutionSystem] = None, dim: Optional[int] = None) -> bool:
    """Every vertex subset of size n - dim(G) + 1 contains some R{x,y}."""
    if g.n > limits.lemma_subset_n:
        raise SizeLimit(f"subset lemma capped at n={limits.lemma_subset_n}, got {g.n}")
    sys = sys if sys is not None else resolution_system(g)
    if dim is None:
        dim, _ = metric_dimension(g, sys)
    rows = minimal_rows(sys.rsets)
    size = g.n - dim + 1
    for a in combinations(range(g.n), size):
        am = to_mask(a)
        if not any(r & ~am == 0 for r in rows):
            return False
    return True


def check_lemma_3_3(g: Graph, sys: Optional[ResolutionSystem] = None) -> tuple[bool, bool]:
    """(hypothesis holds, g is K4).

    The hypothesis: every complement V minus R{u,v} has exactly two vertices
    and distinct pairs have distinct complements, which makes the map a
    bijection on 2-subsets.
    """
    sys = sys if sys is not None else resolution_system(g)
    full = (1 << g.n) - 1
    comps = [full & ~rs for rs in sys.rsets]
    hypothesis = bool(comps) and all(c.bit_count() == 2 for c in comps) and len(set(comps)) == len(comps)
    is_k4 = g.n == 4 and g.num_edges == 6
    return hypothesis, is_k4


def find_twins(dm: DistanceMatrix) -> list[tuple[int, int]]:
    """Pairs whose distance profiles agree on every other vertex."""
    d = dm.d
    out = []
    for u in range(dm.n):
        for v in range(u + 1, dm.n):
            diff = d[u] != d[v]
            diff[u] = diff[v] = False
            if not diff.any():
                out.append((u, v))
    return out
