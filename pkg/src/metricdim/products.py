"""Cartesian products and the explicitly labeled cylinder/prism constructions.

Cylinder C_n x P_k: vertex x_t, 1 <= t <= nk, layer V_p holds
x_{(p-1)n+1} .. x_{pn}.  Prism (C_n x P_k) x P_m: vertex x_t^(r) has global
index (r-1)*nk + t, so each copy is a contiguous block.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import FamilyTag, GraphError, LabeledGraph, degree


def cartesian_product(g: LabeledGraph, h: LabeledGraph) -> LabeledGraph:
    """G x H with vertex (a, b) mapped to index (b-1)*|V(G)| + a."""
    ng = g.vertex_count

    def idx(a: int, b: int) -> int:
        return (b - 1) * ng + a

    edges = [(idx(a, b), idx(c, b)) for b in h.vertices() for a, c in g.edges()]
    edges += [(idx(a, b), idx(a, c)) for a in g.vertices() for b, c in h.edges()]
    return LabeledGraph.from_edges(ng * h.vertex_count, edges)


def _check_cylinder_params(n: int, k: int) -> None:
    if n < 3:
        raise GraphError(f"cycle length n must be >= 3, got n={n}")
    if k < 3:
        raise GraphError(f"path length k must be >= 3, got k={k}")


@dataclass(frozen=True)
class CylinderGraph:
    n: int
    k: int
    graph: LabeledGraph

    def layer(self, p: int) -> range:
        if not 1 <= p <= self.k:
            raise IndexError(f"layer {p} outside 1..{self.k}")
        return range((p - 1) * self.n + 1, p * self.n + 1)


@dataclass(frozen=True)
class PrismGraph:
    n: int
    k: int
    m: int
    graph: LabeledGraph

    @property
    def copy_size(self) -> int:
        return self.n * self.k

    def index(self, t: int, r: int) -> int:
        """Global index of x_t^(r)."""
        if not 1 <= t <= self.copy_size:
            raise IndexError(f"x_{t} outside 1..{self.copy_size}")
        if not 1 <= r <= self.m:
            raise IndexError(f"copy {r} outside 1..{self.m}")
        return (r - 1) * self.copy_size + t

    def coords(self, v: int) -> tuple[int, int]:
        """Inverse of :meth:`index`: global id -> (t, r)."""
        if not 1 <= v <= self.graph.vertex_count:
            raise IndexError(f"vertex {v} outside 1..{self.graph.vertex_count}")
        r, t = divmod(v - 1, self.copy_size)
        return t + 1, r + 1

    def copy_of(self, v: int) -> int:
        return self.coords(v)[1]

    def index_within_copy(self, v: int) -> int:
        return self.coords(v)[0]


def _cylinder_edges(n: int, k: int, offset: int = 0) -> list[tuple[int, int]]:
    # Literal edge-set rule: within a layer j-i in {1, n-1}; across
    # consecutive layers j-i = n.
    edges = []
    for p in range(1, k + 1):
        lo = (p - 1) * n + 1
        hi = p * n
        for i in range(lo, hi + 1):
            for j in range(i + 1, hi + 1):
                if j - i == 1 or j - i == n - 1:
                    edges.append((offset + i, offset + j))
    for q in range(1, k):
        for i in range((q - 1) * n + 1, q * n + 1):
            edges.append((offset + i, offset + i + n))
    return edges


def explicit_cylinder(n: int, k: int) -> CylinderGraph:
    _check_cylinder_params(n, k)
    graph = LabeledGraph.from_edges(n * k, _cylinder_edges(n, k), FamilyTag("cylinder", n=n, k=k))
    return CylinderGraph(n, k, graph)


def explicit_prism(n: int, k: int, m: int) -> PrismGraph:
    _check_cylinder_params(n, k)
    if m < 2:
        raise GraphError(f"number of copies m must be >= 2, got m={m}")
    nk = n * k
    edges = []
    for r in range(m):
        edges += _cylinder_edges(n, k, offset=r * nk)
    for r in range(m - 1):
        edges += [(r * nk + t, (r + 1) * nk + t) for t in range(1, nk + 1)]
    graph = LabeledGraph.from_edges(nk * m, edges, FamilyTag("prism", n=n, k=k, m=m))
    return PrismGraph(n, k, m, graph)


def isomorphic_by_canonical_map(explicit: LabeledGraph, generic: LabeledGraph) -> bool:
    """True iff the identity on vertex indices is an isomorphism."""
    if explicit.vertex_count != generic.vertex_count:
        raise GraphError(
            f"vertex counts differ: {explicit.vertex_count} vs {generic.vertex_count}"
        )
    return explicit.adjacency == generic.adjacency


def compatible(e: int, d: int, n: int) -> bool:
    """x_e and x_d sit at the same cycle position (n divides d - e)."""
    if e == d:
        raise GraphError("compatibility is defined for distinct vertices")
    return (d - e) % n == 0


def layer_of(t: int, n: int, k: int | None = None) -> int:
    if t < 1 or (k is not None and t > n * k):
        bound = f"1..{n * k}" if k is not None else ">= 1"
        raise IndexError(f"vertex x_{t} outside {bound}")
    return math.ceil(t / n)


def congruous(p: int, q: int, k: int, n: int = 3) -> bool:
    """Layers p and q of C_n x P_k agree in the degree of every compatible pair.

    Computed from the explicit graph; the answer does not depend on n.
    """
    cyl = explicit_cylinder(n, k)
    lp, lq = cyl.layer(p), cyl.layer(q)
    return all(degree(cyl.graph, a) == degree(cyl.graph, b) for a, b in zip(lp, lq))
