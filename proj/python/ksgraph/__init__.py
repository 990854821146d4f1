"""Cycle/cocycle oblique projections and Kirchhoff-Symanzik matrices of
oriented multigraphs, backed by the exact-rational C++ core."""

from ksgraph._core import (
    Graph,
    KsgraphError,
    analyze,
    count_spanning_trees,
    default_tree,
    document_tree,
    dual,
    laplacian,
    laplacian_shift_check,
    load_graph,
    random_oblique_projection,
    thermo,
    validate_tree,
    verify_random,
    __version__,
)

__all__ = [
    "Graph",
    "KsgraphError",
    "analyze",
    "count_spanning_trees",
    "default_tree",
    "document_tree",
    "dual",
    "laplacian",
    "laplacian_shift_check",
    "load_graph",
    "random_oblique_projection",
    "thermo",
    "validate_tree",
    "verify_random",
    "__version__",
]
