"""
Factorizations of expanded terms: histories, filtered samples and their limits,
and the multigraphs of factorizations for terms with one top-level block.
"""

from .graph import (
    FINAL,
    INITIAL,
    FactorizationGraph,
    GraphEdge,
    Witness,
    build_factorization_graph,
    vertex_name,
)
from .histories import History, RuleLetter, enumerate_factorizations, history_at, reconstruct
from .paths import (
    FactorizationPath,
    PathStep,
    factorization_to_path,
    find_heavy_cycle,
    iter_paths,
    path_to_factorization,
    total_weight,
    transform_path,
)
from .splitting import (
    Coordinate,
    FilteredData,
    Inconclusive,
    Sample,
    balance_splitting,
    filter_samples,
    limit_terms,
)

__all__ = [
    # Histories
    "History",
    "RuleLetter",
    "enumerate_factorizations",
    "history_at",
    "reconstruct",
    # Filtered data
    "Coordinate",
    "Sample",
    "FilteredData",
    "Inconclusive",
    "filter_samples",
    "limit_terms",
    "balance_splitting",
    # Graphs
    "FactorizationGraph",
    "GraphEdge",
    "Witness",
    "INITIAL",
    "FINAL",
    "vertex_name",
    "build_factorization_graph",
    # Paths
    "PathStep",
    "FactorizationPath",
    "iter_paths",
    "total_weight",
    "path_to_factorization",
    "factorization_to_path",
    "transform_path",
    "find_heavy_cycle",
]
