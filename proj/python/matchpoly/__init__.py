"""Matching polytopes of graphs: minimal inequality description, Gorenstein
classification, exact h*-vectors, and integer decomposition property checks
with constructive splitting."""

from ._core import (
    BudgetError,
    Graph,
    InputError,
    blocks,
    blocks_sufficient,
    check_conditions,
    chorded_c5,
    chortling_c5,
    complete,
    complete_multipartite,
    count_points,
    cycle,
    enumerate_matchings,
    enumerate_t_matchings,
    essential_vertices,
    hstar,
    idp_check,
    is_bipartite,
    is_factor_critical,
    is_t_matching,
    line_graph,
    odd_structures,
    path,
    read_edge_list,
    split,
    verify_lattice_witness,
    wheel,
    wheel_split,
)

__all__ = [
    "BudgetError",
    "Graph",
    "InputError",
    "blocks",
    "blocks_sufficient",
    "check_conditions",
    "chorded_c5",
    "chortling_c5",
    "complete",
    "complete_multipartite",
    "count_points",
    "cycle",
    "enumerate_matchings",
    "enumerate_t_matchings",
    "essential_vertices",
    "hstar",
    "idp_check",
    "is_bipartite",
    "is_factor_critical",
    "is_t_matching",
    "line_graph",
    "odd_structures",
    "path",
    "read_edge_list",
    "split",
    "verify_lattice_witness",
    "wheel",
    "wheel_split",
]
