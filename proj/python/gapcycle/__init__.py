"""Exact and frontier solvers for small general assignment cycle problems.

Cycles are lists of 1-based vertices that start and end at the same vertex.
"""

from ._gapcycle import (
    CostMatrix,
    GapError,
    brute_force_solve,
    coincidence_histogram,
    cycle_cost,
    cycle_count,
    cycle_to_point,
    export_lp,
    feasible_point_count,
    first_column_check,
    frontier_solve,
    gen_euclidean,
    gen_random_gap,
    gen_unique_cost,
    greedy_initial_cycle,
    landscape_csv,
    point_to_cycle,
    rank,
    reducibility_degree,
    reduction_report,
    render,
    row_minima_lower_bound,
    shared_edges,
    sorted_m,
    unrank,
    verify_optimal,
)

__all__ = [
    "CostMatrix",
    "GapError",
    "brute_force_solve",
    "coincidence_histogram",
    "cycle_cost",
    "cycle_count",
    "cycle_to_point",
    "export_lp",
    "feasible_point_count",
    "first_column_check",
    "frontier_solve",
    "gen_euclidean",
    "gen_random_gap",
    "gen_unique_cost",
    "greedy_initial_cycle",
    "landscape_csv",
    "point_to_cycle",
    "rank",
    "reducibility_degree",
    "reduction_report",
    "render",
    "row_minima_lower_bound",
    "shared_edges",
    "sorted_m",
    "unrank",
    "verify_optimal",
]
