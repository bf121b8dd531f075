"""Clique counting via multi-dimensional matrix products."""

from kclique._core import (
    Graph,
    GuardError,
    MultiDimProduct,
    adjacency_tensor_witness,
    common_neighbor_count,
    common_neighbors_tensor,
    complete_graph,
    count_alg1,
    count_alg2,
    count_alg3,
    count_bruteforce,
    count_triangle_method,
    count_triangles_ir,
    detect_alg3,
    emit_edge_list,
    empty_graph,
    enumerate_cliques,
    extension_set,
    find_alg1,
    find_alg2,
    find_alg3,
    gen_gnp,
    gen_planted,
    is_clique,
    parse_dimacs,
    parse_edge_list,
)

__all__ = [
    "Graph",
    "GuardError",
    "MultiDimProduct",
    "adjacency_tensor_witness",
    "common_neighbor_count",
    "common_neighbors_tensor",
    "complete_graph",
    "count_alg1",
    "count_alg2",
    "count_alg3",
    "count_bruteforce",
    "count_triangle_method",
    "count_triangles_ir",
    "detect_alg3",
    "emit_edge_list",
    "empty_graph",
    "enumerate_cliques",
    "extension_set",
    "find_alg1",
    "find_alg2",
    "find_alg3",
    "gen_gnp",
    "gen_planted",
    "is_clique",
    "parse_dimacs",
    "parse_edge_list",
]
