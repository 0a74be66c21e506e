"""Simple undirected graphs, BFS distance tables and cartesian products."""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .config import limits
from .errors import DisconnectedGraph, GraphFormatError, SizeLimit


@dataclass(frozen=True)
class Graph:
    """Immutable graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the strictly ascending tuple of neighbours of ``v``.
    Construct through :meth:`from_edges` unless the adjacency is already
    canonical.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    name: Optional[str] = field(default=None, compare=False)
    vertex_labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphFormatError(f"vertex count must be positive, got {self.n}")
        if len(self.adjacency) != self.n:
            raise GraphFormatError("adjacency length does not match n")
        if self.vertex_labels is not None and len(self.vertex_labels) != self.n:
            raise GraphFormatError("label count does not match n")
        for v, nbrs in enumerate(self.adjacency):
            prev = -1
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphFormatError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise GraphFormatError(f"self-loop at {v}")
                if u <= prev:
                    raise GraphFormatError(f"neighbours of {v} not strictly ascending")
                prev = u
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if v not in self._nbr_sets[u]:
                    raise GraphFormatError(f"edge {v}-{u} is not symmetric")

    @property
    def _nbr_sets(self) -> list[frozenset[int]]:
        cached = self.__dict__.get("_sets")
        if cached is None:
            cached = [frozenset(a) for a in self.adjacency]
            object.__setattr__(self, "_sets", cached)
        return cached

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]],
        name: Optional[str] = None,
        labels: Optional[Sequence[str]] = None,
        strict: bool = False,
    ) -> "Graph":
        """Build a graph from an edge list.

        With ``strict`` set, duplicate edges (in either orientation) are an
        error instead of being merged.
        """
        if n < 1:
            raise GraphFormatError(f"vertex count must be positive, got {n}")
        if n > limits.max_n:
            raise SizeLimit(f"n={n} exceeds max_n={limits.max_n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            if len(e) != 2:
                raise GraphFormatError(f"edge {e!r} is not a pair")
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphFormatError(f"self-loop at {u}")
            if strict and v in nbrs[u]:
                raise GraphFormatError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        adj = tuple(tuple(sorted(s)) for s in nbrs)
        return cls(n, adj, name, tuple(labels) if labels is not None else None)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def label(self, v: int) -> str:
        return self.vertex_labels[v] if self.vertex_labels is not None else str(v)

    def relabel(self, name: Optional[str]) -> "Graph":
        return Graph(self.n, self.adjacency, name, self.vertex_labels)

    # --- JSON ---------------------------------------------------------

    def to_dict(self) -> dict:
        out: dict = {}
        if self.name is not None:
            out["name"] = self.name
        out["n"] = self.n
        out["edges"] = [list(e) for e in self.edges()]
        if self.vertex_labels is not None:
            out["labels"] = list(self.vertex_labels)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Graph":
        if not isinstance(data, dict):
            raise GraphFormatError("graph JSON must be an object")
        try:
            n = data["n"]
            edges = data["edges"]
        except KeyError as exc:
            raise GraphFormatError(f"missing field {exc.args[0]!r}") from None
        if not isinstance(n, int) or isinstance(n, bool):
            raise GraphFormatError("'n' must be an integer")
        if not isinstance(edges, list):
            raise GraphFormatError("'edges' must be a list")
        for e in edges:
            if (
                not isinstance(e, list)
                or len(e) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
            ):
                raise GraphFormatError(f"malformed edge {e!r}")
        labels = data.get("labels")
        if labels is not None and not all(isinstance(s, str) for s in labels):
            raise GraphFormatError("'labels' must be a list of strings")
        return cls.from_edges(n, edges, data.get("name"), labels, strict=True)

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON: {exc}") from None
        return cls.from_dict(data)


def load_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return Graph.from_json(fh.read())


def save_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(g.to_json() + "\n")


def _bfs(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    return min(_bfs(g, 0)) >= 0


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop distances of a connected graph (read-only ``int`` array)."""

    n: int
    d: np.ndarray
    diameter: int

    def __getitem__(self, key):
        return self.d[key]

    def dist(self, u: int, v: int) -> int:
        return int(self.d[u, v])

    def rows(self) -> list[list[int]]:
        return self.d.tolist()


def distance_matrix(g: Graph) -> DistanceMatrix:
    if g.n > limits.max_n:
        raise SizeLimit(f"n={g.n} exceeds max_n={limits.max_n}")
    table = np.empty((g.n, g.n), dtype=np.int64)
    for s in range(g.n):
        row = _bfs(g, s)
        if s == 0 and min(row) < 0:
            raise DisconnectedGraph(f"vertex {row.index(-1)} unreachable from 0")
        table[s] = row
    table.setflags(write=False)
    return DistanceMatrix(g.n, table, int(table.max()))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G box H with vertex ``(u, v)`` at index ``u * |V(H)| + v``."""
    m = h.n
    n = g.n * m
    if n > limits.max_n:
        raise SizeLimit(f"product order {n} exceeds max_n={limits.max_n}")
    adj = []
    for u in range(g.n):
        for v in range(m):
            nb = [u * m + w for w in h.adjacency[v]]
            nb.extend(x * m + v for x in g.adjacency[u])
            adj.append(tuple(sorted(nb)))
    labels = tuple(f"{g.label(u)}|{h.label(v)}" for u in range(g.n) for v in range(m))
    name = None
    if g.name is not None and h.name is not None:
        name = f"{g.name} x {h.name}"
    return Graph(n, tuple(adj), name, labels)


def product_distance_identity_check(g: Graph, h: Graph) -> bool:
    """BFS distances in G box H equal the sum of factor distances, pair by pair."""
    dg = distance_matrix(g).d
    dh = distance_matrix(h).d
    dp = distance_matrix(cartesian_product(g, h)).d
    expected = (dg[:, None, :, None] + dh[None, :, None, :]).reshape(dp.shape)
    return bool(np.array_equal(dp, expected))
