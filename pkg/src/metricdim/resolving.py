"""Distance representations and the resolving-set predicates.

Every predicate returns a :class:`Check`, which is truthy when the property
holds and otherwise carries the lexicographically smallest offending pair
(ordered by ``(min, max)``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .graph import DistanceMatrix, GraphError, LabeledGraph

VertexSet = tuple[int, ...]


@dataclass(frozen=True)
class Check:
    holds: bool
    pair: tuple[int, int] | None = None
    offset: int | None = None  # the constant difference for doubly-resolving failures

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class StrongResolvingGraph:
    base: LabeledGraph
    edges: frozenset[tuple[int, int]]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def incident_vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for e in self.edges for v in e}))


def as_vertex_set(q: Sequence[int], size: int) -> VertexSet:
    """Validate ``q`` against a graph on ``size`` vertices; keeps q's order."""
    members = tuple(int(v) for v in q)
    for v in members:
        if not 1 <= v <= size:
            raise IndexError(f"vertex {v} outside 1..{size}")
    if len(set(members)) != len(members):
        raise GraphError(f"vertex set has duplicates: {members}")
    return members


def representation(v: int, q: Sequence[int], d: DistanceMatrix) -> tuple[int, ...]:
    """r(v|Q): distances from v to each member of Q, in Q's order."""
    q = as_vertex_set(q, d.size)
    row = d.row(v)
    return tuple(row[w - 1] for w in q)


def representation_table(q: Sequence[int], d: DistanceMatrix) -> list[tuple[int, ...]]:
    """r(v|Q) for v = 1..N, in vertex order."""
    q = as_vertex_set(q, d.size)
    cols = d.as_array()[:, [w - 1 for w in q]]
    return [tuple(int(x) for x in r) for r in cols]


def doubly_offset(x: int, y: int, q: Sequence[int], d: DistanceMatrix) -> int | None:
    """The integer lambda with r(x|Q) - r(y|Q) = lambda*I, or None if not constant."""
    diff = {a - b for a, b in zip(representation(x, q, d), representation(y, q, d))}
    return diff.pop() if len(diff) == 1 else None


def _first_duplicate(keys: list[tuple[int, ...]]) -> tuple[int, int] | None:
    # Smallest (min, max) pair with equal keys: the earliest-seen index is
    # the smaller vertex, and we want the smallest such first vertex.
    groups: dict[tuple[int, ...], list[int]] = {}
    for v, key in enumerate(keys, start=1):
        groups.setdefault(key, []).append(v)
    clashes = [g[:2] for g in groups.values() if len(g) > 1]
    if not clashes:
        return None
    a, b = min(clashes)
    return a, b


def is_resolving(q: Sequence[int], d: DistanceMatrix) -> Check:
    """Q resolves the graph iff r(.|Q) is injective on all vertices."""
    if len(q) == 0:
        raise GraphError("resolving set must be non-empty")
    pair = _first_duplicate(representation_table(q, d))
    return Check(pair is None, pair)


def is_doubly_resolving(q: Sequence[int], d: DistanceMatrix) -> Check:
    """No two distinct vertices have representations differing by a constant vector.

    Constant differences are detected by comparing the representations
    shifted so their first coordinate is zero.
    """
    if len(q) < 2:
        raise GraphError("doubly resolving set needs at least 2 vertices")
    table = representation_table(q, d)
    keys = [tuple(c - r[0] for c in r[1:]) for r in table]
    pair = _first_duplicate(keys)
    if pair is None:
        return Check(True)
    x, y = pair
    return Check(False, pair, table[x - 1][0] - table[y - 1][0])


def strongly_resolves(w: int, u: int, v: int, d: DistanceMatrix) -> bool:
    """u lies on a shortest w-v path or v lies on a shortest w-u path."""
    return d[w, u] == d[w, v] + d[v, u] or d[w, v] == d[w, u] + d[u, v]


def strong_pair_matrix(d: DistanceMatrix) -> tuple[np.ndarray, np.ndarray]:
    """Pairs (u < v, 0-based, lexicographic) and a bool matrix cover[pair, w].

    ``cover[p, w]`` is True when vertex w+1 strongly resolves pair p.
    """
    a = d.as_array().astype(np.int64)
    n = a.shape[0]
    iu, iv = np.triu_indices(n, k=1)
    duv = a[iu, iv][:, None]
    cover = (a[iu] == a[iv] + duv) | (a[iv] == a[iu] + duv)
    return np.stack([iu, iv], axis=1), cover


def is_strong_resolving(q: Sequence[int], d: DistanceMatrix) -> Check:
    if len(q) == 0:
        raise GraphError("strong resolving set must be non-empty")
    q = as_vertex_set(q, d.size)
    pairs, cover = strong_pair_matrix(d)
    ok = cover[:, [w - 1 for w in q]].any(axis=1)
    if ok.all():
        return Check(True)
    u, v = pairs[int(np.argmin(ok))]
    return Check(False, (int(u) + 1, int(v) + 1))


def is_maximally_distant(u: int, v: int, g: LabeledGraph, d: DistanceMatrix) -> bool:
    """No neighbour of u is farther from v than u is."""
    if u == v:
        raise GraphError("maximal distance is defined for distinct vertices")
    duv = d[v, u]
    return all(d[v, w] <= duv for w in g.neighbors(u))


def mutually_maximally_distant(u: int, v: int, g: LabeledGraph, d: DistanceMatrix) -> bool:
    return is_maximally_distant(u, v, g, d) and is_maximally_distant(v, u, g, d)


def strong_resolving_graph(g: LabeledGraph, d: DistanceMatrix) -> StrongResolvingGraph:
    edges = frozenset(
        (u, v)
        for u, v in combinations(g.vertices(), 2)
        if mutually_maximally_distant(u, v, g, d)
    )
    return StrongResolvingGraph(g, edges)


def is_vertex_cover(q: Sequence[int], srg: StrongResolvingGraph) -> bool:
    members = set(q)
    return all(u in members or v in members for u, v in srg.edges)
