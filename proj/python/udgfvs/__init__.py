"""Feedback vertex set on unit disk and similar geometric intersection graphs."""

from ._core import (
    Graph,
    InputError,
    InternalError,
    ResourceError,
    bench_csv,
    count_high_degree,
    exact_treewidth,
    format_graph,
    is_forest,
    min_fvs_bruteforce,
    parse_graph,
    peel,
    planted_graph,
    random_udg_graph,
    solve,
    validate,
)

__all__ = [
    "Graph",
    "InputError",
    "InternalError",
    "ResourceError",
    "bench_csv",
    "count_high_degree",
    "exact_treewidth",
    "format_graph",
    "is_forest",
    "min_fvs_bruteforce",
    "parse_graph",
    "peel",
    "planted_graph",
    "random_udg_graph",
    "solve",
    "validate",
]
