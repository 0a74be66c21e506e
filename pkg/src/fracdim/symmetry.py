"""Automorphism orbits by distance-based partition refinement and
individualisation backtracking."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .config import limits
from .errors import NotVertexTransitive, SizeLimit
from .graph import DistanceMatrix, Graph, distance_matrix
from .resolve import r_min


@dataclass(frozen=True, eq=False)
class OrbitPartition:
    n: int
    orbit_id: tuple[int, ...]
    orbit_count: int
    generators: tuple[tuple[int, ...], ...]

    def orbits(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for v, o in enumerate(self.orbit_id):
            groups.setdefault(o, []).append(v)
        return [groups[k] for k in sorted(groups)]


def is_automorphism(g: Graph, perm) -> bool:
    if sorted(perm) != list(range(g.n)):
        return False
    for u, v in g.edges():
        if not g.has_edge(perm[u], perm[v]):
            return False
    # bijection preserving the edge count also preserves non-edges
    return True


class _Refiner:
    """Joint refinement of two colourings of the same graph.

    Both colourings share one colour vocabulary so that cells correspond
    between the "source" and "target" sides of a candidate mapping.
    """

    def __init__(self, dm: DistanceMatrix):
        self.rows = dm.rows()
        self.n = dm.n

    def refine(self, left: list[int], right: list[int]) -> Optional[tuple[list[int], list[int]]]:
        rows = self.rows
        n = self.n
        cells = len(set(left))
        while True:
            sig_l = [
                (left[x], tuple(sorted(Counter((rows[x][y], left[y]) for y in range(n)).items())))
                for x in range(n)
            ]
            sig_r = [
                (right[x], tuple(sorted(Counter((rows[x][y], right[y]) for y in range(n)).items())))
                for x in range(n)
            ]
            if Counter(sig_l) != Counter(sig_r):
                return None
            vocab = {s: i for i, s in enumerate(sorted(set(sig_l)))}
            left = [vocab[s] for s in sig_l]
            right = [vocab[s] for s in sig_r]
            if len(vocab) == cells:
                return left, right
            cells = len(vocab)


def _find_mapping(g: Graph, refiner: _Refiner, base: list[int], src: int, dst: int) -> Optional[list[int]]:
    """An automorphism sending ``src`` to ``dst``, or ``None`` if none exists."""
    n = g.n
    fresh = max(base) + 1

    def search(left: list[int], right: list[int]) -> Optional[list[int]]:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(left):
            cells.setdefault(c, []).append(v)
        target_cell = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target_cell = c
                break
        if target_cell is None:
            where = {c: v for v, c in enumerate(right)}
            perm = [where[left[v]] for v in range(n)]
            return perm if is_automorphism(g, perm) else None
        x = cells[target_cell][0]
        mark = max(left) + 1
        for y in range(n):
            if right[y] != target_cell:
                continue
            l2 = list(left)
            r2 = list(right)
            l2[x] = mark
            r2[y] = mark
            refined = refiner.refine(l2, r2)
            if refined is None:
                continue
            found = search(*refined)
            if found is not None:
                return found
        return None

    left = list(base)
    right = list(base)
    left[src] = fresh
    right[dst] = fresh
    refined = refiner.refine(left, right)
    if refined is None:
        return None
    return search(*refined)


def automorphism_orbits(g: Graph, dm: Optional[DistanceMatrix] = None, stop_if_intransitive: bool = False) -> OrbitPartition:
    """Orbit partition of the full automorphism group.

    Vertices are split first by an equitable refinement (orbits never cross
    its cells). Inside a cell, each vertex is tested against the existing
    orbit representatives by an exhaustive search for a mapping automorphism;
    found automorphisms are merged into a union-find over their cycles.
    """
    if g.n > limits.vt_n:
        raise SizeLimit(f"automorphism search capped at n={limits.vt_n}, got {g.n}")
    dm = dm if dm is not None else distance_matrix(g)
    refiner = _Refiner(dm)
    base, _ = refiner.refine([0] * g.n, [0] * g.n)

    parent = list(range(g.n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def absorb(perm: list[int]) -> None:
        for v, w in enumerate(perm):
            a, b = find(v), find(w)
            if a != b:
                parent[max(a, b)] = min(a, b)

    generators: list[tuple[int, ...]] = []
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(base):
        cells.setdefault(c, []).append(v)

    if not (stop_if_intransitive and len(cells) > 1):
        for c in sorted(cells):
            reps: list[int] = []
            for w in cells[c]:
                placed = False
                for rep in reps:
                    if find(rep) == find(w):
                        placed = True
                        break
                    perm = _find_mapping(g, refiner, base, rep, w)
                    if perm is not None:
                        generators.append(tuple(perm))
                        absorb(perm)
                        placed = True
                        break
                if not placed:
                    reps.append(w)
                    if stop_if_intransitive and len(reps) > 1:
                        break

    roots = sorted({find(v) for v in range(g.n)})
    index = {r: i for i, r in enumerate(roots)}
    orbit_id = tuple(index[find(v)] for v in range(g.n))
    return OrbitPartition(g.n, orbit_id, len(roots), tuple(generators))


def is_vertex_transitive(g: Graph, dm: Optional[DistanceMatrix] = None) -> bool:
    if g.n == 1:
        return True
    return automorphism_orbits(g, dm, stop_if_intransitive=True).orbit_count == 1


def vt_fracdim(g: Graph, assume_vt: bool = False) -> Fraction:
    """``|V| / r(G)`` for a vertex-transitive graph."""
    if not assume_vt and not is_vertex_transitive(g):
        raise NotVertexTransitive(f"{g.name or 'graph'} is not vertex-transitive")
    r, _ = r_min(g)
    return Fraction(g.n, r)


def distance_degree_profiles_uniform(dm: DistanceMatrix) -> bool:
    """All vertices share one distance-degree sequence (a necessary VT condition)."""
    profiles = {tuple(sorted(Counter(row).items())) for row in dm.rows()}
    return len(profiles) == 1
