"""Exact minimum-cardinality search for beta, psi and sdim.

Candidate sets are tried by increasing size and, within a size, in
lexicographic order of their sorted members, so the returned witness is the
lexicographically smallest minimum set.  The inner loop runs in
:mod:`metricdim._backend` (compiled when available).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from . import _backend, _fallback
from .graph import DistanceMatrix, LabeledGraph
from .resolving import (
    StrongResolvingGraph,
    VertexSet,
    is_vertex_cover,
    strong_pair_matrix,
    strong_resolving_graph,
)

METRIC_DIMENSION = "metric_dimension"
DOUBLY_RESOLVING_NUMBER = "doubly_resolving_number"
STRONG_METRIC_DIMENSION = "strong_metric_dimension"


@dataclass(frozen=True)
class SearchResult:
    parameter: str
    value: int
    witness: VertexSet
    exhausted_sizes: tuple[int, ...]
    examined: int = field(default=0, compare=False)


class SearchCapExceeded(RuntimeError):
    def __init__(self, parameter: str, cap: int, exhausted_sizes: tuple[int, ...], examined: int):
        super().__init__(f"no set of size <= {cap} achieves {parameter}")
        self.parameter = parameter
        self.cap = cap
        self.exhausted_sizes = exhausted_sizes
        self.examined = examined


def default_cap(g: LabeledGraph) -> int:
    """2n + 2 for families with a cycle length n, else the vertex count."""
    n = g.family.n
    cap = 2 * n + 2 if n is not None else g.vertex_count
    return min(cap, g.vertex_count)


def default_workers() -> int:
    env = os.environ.get("METRICDIM_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _first_hit(kernel, fallback, data, pool: np.ndarray, size: int, workers: int, *extra):
    """Run ``kernel`` over all first-element positions; keep sequential semantics."""

    def run(lo: int, hi: int):
        try:
            return kernel(data, pool, size, lo, hi, *extra)
        except OverflowError:
            return fallback(data, pool, size, lo, hi, *extra)

    n_first = len(pool) - size + 1
    if n_first <= 0:
        return None, 0
    if workers <= 1 or _backend.NAME != "cython" or n_first == 1:
        return run(0, n_first)
    examined = 0
    with ThreadPoolExecutor(max_workers=workers) as pool_ex:
        futures = [pool_ex.submit(run, lo, lo + 1) for lo in range(n_first)]
        for fut in futures:
            hit, count = fut.result()
            examined += count
            if hit is not None:
                for other in futures:
                    other.cancel()
                return hit, examined
    return None, examined


def _search(parameter, kernel, fallback, data, pool, g, start, size_cap, workers, extra=()):
    cap = default_cap(g) if size_cap is None else size_cap
    if cap < 1:
        raise ValueError(f"size_cap must be >= 1, got {cap}")
    workers = default_workers() if workers is None else workers
    pool = np.ascontiguousarray(pool, dtype=np.int32)
    exhausted = list(range(1, start))
    examined = 0
    for size in range(start, cap + 1):
        hit, count = _first_hit(kernel, fallback, data, pool, size, workers, *extra)
        examined += count
        if hit is not None:
            witness = tuple(sorted(v + 1 for v in hit))
            return SearchResult(parameter, size, witness, tuple(exhausted), examined)
        exhausted.append(size)
    raise SearchCapExceeded(parameter, cap, tuple(exhausted), examined)


def min_resolving(
    g: LabeledGraph, d: DistanceMatrix, size_cap: int | None = None, workers: int | None = None
) -> SearchResult:
    data = np.ascontiguousarray(d.as_array(), dtype=np.int32)
    pool = np.arange(g.vertex_count)
    return _search(
        METRIC_DIMENSION, _backend.first_hit_distinct, _fallback.first_hit_distinct,
        data, pool, g, 1, size_cap, workers, (False,),
    )


def min_doubly_resolving(
    g: LabeledGraph, d: DistanceMatrix, size_cap: int | None = None, workers: int | None = None
) -> SearchResult:
    # size 1 is infeasible: every pair differs by a 1-vector, which is constant
    data = np.ascontiguousarray(d.as_array(), dtype=np.int32)
    pool = np.arange(g.vertex_count)
    return _search(
        DOUBLY_RESOLVING_NUMBER, _backend.first_hit_distinct, _fallback.first_hit_distinct,
        data, pool, g, 2, size_cap, workers, (True,),
    )


def _pack_rows(cover: np.ndarray) -> np.ndarray:
    """Bool (rows, nv) -> deduplicated uint64 bitsets, sparsest rows first."""
    rows = np.unique(cover, axis=0)
    rows = rows[np.argsort(rows.sum(axis=1), kind="stable")]
    nv = cover.shape[1]
    nwords = (nv + 63) // 64
    padded = np.zeros((rows.shape[0], nwords * 64), dtype=bool)
    padded[:, :nv] = rows
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed.view(np.uint64).reshape(rows.shape[0], nwords))


def min_strong_resolving(
    g: LabeledGraph,
    d: DistanceMatrix,
    size_cap: int | None = None,
    workers: int | None = None,
    srg: StrongResolvingGraph | None = None,
) -> SearchResult:
    """Candidates are restricted to vertices incident to a strong-resolving-graph edge.

    A minimum set never needs any other vertex, so the lexicographic order
    restricted to that pool yields the same witness as the unrestricted order.
    """
    srg = strong_resolving_graph(g, d) if srg is None else srg
    _, cover = strong_pair_matrix(d)
    masks = _pack_rows(cover)
    pool = np.asarray([v - 1 for v in srg.incident_vertices()])
    return _search(
        STRONG_METRIC_DIMENSION, _backend.first_hit_cover, _fallback.first_hit_cover,
        masks, pool, g, 1, size_cap, workers,
    )


def _cover_bnb(edges: list[tuple[int, int]], chosen: frozenset[int], best: list[int]) -> None:
    uncovered = [e for e in edges if e[0] not in chosen and e[1] not in chosen]
    if not uncovered:
        best[0] = min(best[0], len(chosen))
        return
    # greedy maximal matching is a lower bound on the remaining cover size
    used: set[int] = set()
    matching = 0
    for u, v in uncovered:
        if u not in used and v not in used:
            used.update((u, v))
            matching += 1
    if len(chosen) + matching >= best[0]:
        return
    u, v = uncovered[0]
    _cover_bnb(uncovered, chosen | {u}, best)
    _cover_bnb(uncovered, chosen | {v}, best)


def min_vertex_cover_sr(srg: StrongResolvingGraph, size_cap: int | None = None) -> SearchResult:
    """Minimum vertex cover of the strong resolving graph by branch and bound.

    Independent of the strong-resolving predicate; used to cross-check
    :func:`min_strong_resolving`.
    """
    edges = srg.sorted_edges()
    incident = srg.incident_vertices()
    cap = default_cap(srg.base) if size_cap is None else size_cap
    best = [len(incident)]
    _cover_bnb(edges, frozenset(), best)
    value = max(best[0], 1)
    if value > cap:
        raise SearchCapExceeded(STRONG_METRIC_DIMENSION, cap, tuple(range(1, cap + 1)), 0)
    examined = 0
    for combo in combinations(incident, value):
        examined += 1
        if is_vertex_cover(combo, srg):
            return SearchResult(
                STRONG_METRIC_DIMENSION, value, combo, tuple(range(1, value)), examined
            )
    raise AssertionError("branch and bound value has no witnessing cover")
