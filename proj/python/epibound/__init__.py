"""SIR epidemic bounds on finite graphs.

Thin wrapper over the C++ core: graph construction and BFS, the
distance-sum lower bound on the expected ever-infected count, degree
upper bounds and closed forms, percolation/process Monte Carlo, exact
enumeration oracles, and the graph family generators.
"""

from epibound._core import (  # noqa: F401
    Ball,
    CapExceeded,
    DomainError,
    Graph,
    __version__,
    bfs_distances,
    cf_cube_lb,
    cf_cycle_lb,
    cf_gw_mean,
    cf_kn_lower,
    cf_rary_tree_mu,
    cf_reg_tree_root,
    cf_rooted_reg_tree_limit,
    degree_stats,
    estimate_mean,
    exact_distribution_bruteforce,
    exact_mean_bruteforce,
    exact_mean_bruteforce_grid,
    exact_mean_tree,
    extract_ball,
    gap_bound_thm3,
    gen_complete,
    gen_cycle,
    gen_generalized_cycle,
    gen_gw_tree,
    gen_hypercube,
    gen_path,
    gen_random_regular,
    gen_rary_tree,
    is_tree,
    lower_bound,
    make_report,
    run_convergence,
    run_kn_gap,
    run_sandwich,
    simulate_percolation,
    simulate_process,
    tree_like_radius,
    upper_bound_degree,
)
