"""Smoke tests for the python bindings."""

import math

import pytest

import epibound as eb


def test_graph_roundtrip():
    g = eb.Graph(3, [(0, 1), (1, 0), (1, 2)])
    assert g.n == 3
    assert g.m == 2  # duplicate edge collapsed
    assert g.neighbors(1) == [0, 2]
    assert g.degree(1) == 2
    assert g.edges() == [(0, 1), (1, 2)]


def test_graph_rejects_self_loops():
    with pytest.raises(ValueError):
        eb.Graph(2, [(0, 0)])


def test_bfs_and_ball():
    c5 = eb.gen_cycle(5)
    assert eb.bfs_distances(c5, [0]) == [0, 1, 2, 2, 1]
    ball = eb.extract_ball(eb.gen_cycle(7), 0, 2)
    assert ball.vertices == [0, 1, 2, 5, 6]
    assert len(ball.edges) == 4


def test_lower_bound_known_values():
    assert eb.lower_bound(eb.gen_cycle(5), [0], 0.5) == pytest.approx(2.5)
    q3 = eb.gen_hypercube(3)
    assert eb.lower_bound(q3, [0], 0.5) == pytest.approx(3.375)
    assert eb.cf_cube_lb(3, 0.5) == pytest.approx(3.375)
    assert eb.cf_cycle_lb(5, 0.5) == pytest.approx(2.5)


def test_upper_bound_absent_when_undefined():
    c5 = eb.gen_cycle(5)
    assert eb.upper_bound_degree(c5, 1, 0.6) is None
    assert eb.upper_bound_degree(c5, 1, 0.2) == pytest.approx(1 / 0.6)


def test_exact_oracle():
    k3 = eb.gen_complete(3)
    assert eb.exact_mean_bruteforce(k3, [0], 0.5) == pytest.approx(2.25)
    pmf = eb.exact_distribution_bruteforce(k3, [0], 0.5)
    assert sum(pmf) == pytest.approx(1.0)
    mean = sum(y * p for y, p in enumerate(pmf))
    assert mean == pytest.approx(2.25)

    tree, root = eb.gen_rary_tree(3, 2)
    assert eb.exact_mean_tree(tree, [root], 0.25) == pytest.approx(1.75)
    assert eb.cf_rary_tree_mu(3, 2, 0.25) == pytest.approx(1.75)


def test_exact_cap_raises():
    c25 = eb.gen_cycle(25)
    with pytest.raises(ValueError):
        eb.exact_mean_bruteforce(c25, [0], 0.5)


def test_simulation_reproducible():
    p2 = eb.gen_path(2)
    a = eb.estimate_mean(p2, [0], 0.5, trials=20000, seed=3)
    b = eb.estimate_mean(p2, [0], 0.5, trials=20000, seed=3)
    assert a == b
    assert abs(a["mean"] - 1.5) <= 3 * a["std_error"]
    c = eb.estimate_mean(p2, [0], 0.5, trials=20000, seed=3, jobs=2)
    assert c["mean"] == a["mean"]

    out = eb.simulate_percolation(p2, [0], 0.5, seed=1, trial=0)
    assert out["ever_infected"] in (1, 2)


def test_generators_shapes():
    assert eb.gen_random_regular(4, 3, seed=1).m == 6  # K4 is forced
    gc = eb.gen_generalized_cycle(10, 1, seed=1)
    assert gc.m == 11
    with pytest.raises(ValueError):
        eb.gen_random_regular(5, 3, seed=1)  # parity
    tree, root, truncated = eb.gen_gw_tree([0.0, 1.0], depth_cap=5, seed=1)
    assert tree.n == 6 and truncated
    assert eb.is_tree(tree)


def test_report_and_tree_radius():
    report = eb.make_report(eb.gen_cycle(5), [0], 0.5, with_exact=True)
    assert report["lb"] == pytest.approx(2.5)
    assert report["ub_degree"] is None
    assert report["lb"] <= report["exact"] + 1e-9
    assert eb.tree_like_radius(eb.gen_cycle(7), 0, 10) == 2


def test_experiment_rows():
    rows = eb.run_convergence("cycle", [51], [0.5], k=1, trials=200,
                              graphs_per_cell=2, master_seed=5)
    assert len(rows) == 2
    for row in rows:
        assert row["lb"] == pytest.approx(eb.cf_cycle_lb(51, 0.5))
        assert row["limit"] == pytest.approx(3.0)
        assert row["gap"] >= -3 * row["mc_se"]
