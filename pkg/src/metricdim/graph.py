"""Labeled undirected graphs, the base cycle/path families and BFS distances.

Vertices are numbered 1..N on the public surface.  Internally the distance
matrix is a 0-indexed numpy array; :meth:`DistanceMatrix.as_array` exposes it
for the search kernels only.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np


class GraphError(ValueError):
    """Raised for invalid graph parameters or malformed graphs."""


@dataclass(frozen=True)
class FamilyTag:
    """Which family a graph was built as: cycle, path, cylinder, prism or generic."""

    kind: str
    n: int | None = None
    k: int | None = None
    m: int | None = None

    def describe(self) -> str:
        params = {"n": self.n, "k": self.k, "m": self.m}
        inner = ",".join(f"{key}={val}" for key, val in params.items() if val is not None)
        return f"{self.kind}({inner})" if inner else self.kind


GENERIC = FamilyTag("generic")


@dataclass(frozen=True, eq=False)
class LabeledGraph:
    """Connected simple graph on vertices 1..vertex_count.

    ``adjacency[v - 1]`` is the ascending tuple of neighbours of ``v``.
    Use :meth:`from_edges` rather than the raw constructor.
    """

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    family: FamilyTag = GENERIC

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[tuple[int, int]],
        family: FamilyTag = GENERIC,
    ) -> "LabeledGraph":
        if vertex_count < 1:
            raise GraphError(f"vertex_count must be >= 1, got {vertex_count}")
        nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise GraphError(f"edge ({u}, {v}) outside 1..{vertex_count}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u - 1].add(v)
            nbrs[v - 1].add(u)
        graph = cls(vertex_count, tuple(tuple(sorted(s)) for s in nbrs), family)
        graph._check_connected()
        return graph

    def _check_connected(self) -> None:
        seen = _bfs_layers(self.adjacency, 1)
        if min(seen) < 0:
            missing = 1 + int(np.argmin(seen))
            raise GraphError(f"graph is disconnected: vertex {missing} unreachable from vertex 1")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v - 1]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors(u)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ascending ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for u in self.vertices() for v in self.adjacency[u - 1] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.vertex_count:
            raise IndexError(f"vertex {v} outside 1..{self.vertex_count}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.adjacency))

    def __repr__(self) -> str:
        return (
            f"LabeledGraph({self.family.describe()}, vertices={self.vertex_count}, "
            f"edges={self.edge_count})"
        )


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop distances.  ``dm[u, v]`` takes 1-based vertex ids."""

    _matrix: np.ndarray = field(repr=False)

    @property
    def size(self) -> int:
        return self._matrix.shape[0]

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        self._check_vertex(u)
        self._check_vertex(v)
        return int(self._matrix[u - 1, v - 1])

    def row(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(int(x) for x in self._matrix[v - 1])

    @property
    def diameter(self) -> int:
        return int(self._matrix.max())

    def as_array(self) -> np.ndarray:
        """Read-only 0-indexed int32 view, for vectorised callers."""
        return self._matrix

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.size:
            raise IndexError(f"vertex {v} outside 1..{self.size}")


def _bfs_layers(adjacency: Sequence[Sequence[int]], source: int) -> list[int]:
    dist = [-1] * len(adjacency)
    dist[source - 1] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u - 1] + 1
        for w in adjacency[u - 1]:
            if dist[w - 1] < 0:
                dist[w - 1] = du
                queue.append(w)
    return dist


def all_pairs_distances(g: LabeledGraph) -> DistanceMatrix:
    """Breadth-first search from every vertex.

    Raises GraphError naming an unreachable pair if ``g`` is disconnected
    (only possible for graphs assembled without :meth:`LabeledGraph.from_edges`).
    """
    n = g.vertex_count
    mat = np.empty((n, n), dtype=np.int32)
    for s in g.vertices():
        row = _bfs_layers(g.adjacency, s)
        if min(row) < 0:
            t = 1 + row.index(-1)
            raise GraphError(f"graph is disconnected: no path between {s} and {t}")
        mat[s - 1] = row
    mat.setflags(write=False)
    return DistanceMatrix(mat)


def degree(g: LabeledGraph, v: int) -> int:
    return len(g.neighbors(v))


def build_cycle(n: int) -> LabeledGraph:
    """The cycle C_n on vertices 1..n."""
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got n={n}")
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return LabeledGraph.from_edges(n, edges, FamilyTag("cycle", n=n))


def build_path(k: int) -> LabeledGraph:
    """The path P_k on vertices 1..k."""
    if k < 2:
        raise GraphError(f"path needs k >= 2, got k={k}")
    edges = [(i, i + 1) for i in range(1, k)]
    return LabeledGraph.from_edges(k, edges, FamilyTag("path", k=k))


def is_bipartite(g: LabeledGraph) -> bool:
    dist = _bfs_layers(g.adjacency, 1)
    return all((dist[u - 1] - dist[v - 1]) % 2 for u, v in g.edges())
