"""Resolving, doubly resolving and strong resolving sets of cylinders and prisms."""

from .graph import DistanceMatrix, GraphError, LabeledGraph, all_pairs_distances
from .products import explicit_cylinder, explicit_prism
from .resolving import (
    is_doubly_resolving,
    is_resolving,
    is_strong_resolving,
    strong_resolving_graph,
)
from .search import (
    SearchCapExceeded,
    SearchResult,
    min_doubly_resolving,
    min_resolving,
    min_strong_resolving,
)

__all__ = [
    "DistanceMatrix",
    "GraphError",
    "LabeledGraph",
    "SearchCapExceeded",
    "SearchResult",
    "all_pairs_distances",
    "explicit_cylinder",
    "explicit_prism",
    "is_doubly_resolving",
    "is_resolving",
    "is_strong_resolving",
    "min_doubly_resolving",
    "min_resolving",
    "min_strong_resolving",
    "strong_resolving_graph",
]
