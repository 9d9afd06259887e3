import math

import pytest

import gapcycle as gc


def test_rank_unrank_round_trip():
    assert gc.unrank(1, 5) == [5, 4, 3, 2, 1, 5]
    assert gc.unrank(24, 5) == [5, 1, 2, 3, 4, 5]
    for j in range(1, 121):
        assert gc.rank(gc.unrank(j, 6)) == j
    big = gc.cycle_count(20)
    assert big == math.factorial(19)
    assert gc.rank(gc.unrank(big, 20)) == big


def test_errors_carry_codes():
    with pytest.raises(gc.GapError) as info:
        gc.unrank(25, 5)
    assert info.value.code == "RankOutOfRange"
    with pytest.raises(gc.GapError) as info:
        gc.CostMatrix([[0, 1], [1, math.inf]])
    assert info.value.code == "DiagonalNotInfinite"


def test_matrix_round_trip():
    m = gc.CostMatrix([[math.inf, 3], [-4.5, math.inf]])
    assert m.n == 2
    assert m(2, 1) == -4.5
    assert gc.CostMatrix.parse(m.format()) == m
    assert m.rows()[0][1] == 3


def test_brute_force_and_frontier_agree():
    for seed in range(10):
        m = gc.gen_random_gap(6, seed, -1.0, 1.0)
        exact = gc.brute_force_solve(m)
        assert exact["certificate"] == "ExactByBruteForce"
        assert exact["cost"] == gc.cycle_cost(m, exact["cycle"])
        assert gc.unrank(exact["rank"], 6) == exact["cycle"]
        full = gc.frontier_solve(m, eps_hi=math.inf)
        assert full["cost"] == exact["cost"]
        assert gc.verify_optimal(m, exact["cycle"])["status"] != "Improved"


def test_unique_cost_solution():
    r = gc.brute_force_solve(gc.gen_unique_cost(3))
    assert r["cycle"] == [3, 1, 2, 3]
    assert r["cost"] == 16
    assert r["rank"] == 2


def test_reduction_report():
    m = gc.gen_euclidean(7, 3)
    rep = gc.reduction_report(m, gc.greedy_initial_cycle(m, 7))
    assert set(rep) == {"A", "p", "a", "eps", "T", "tubes", "p_tubes"}
    assert isinstance(rep["A"], int)
    assert abs(gc.reducibility_degree([12, 4, 4] + [1] * 14, 11, 17) - 2.934) < 0.005


def test_ip_bridge():
    x = gc.cycle_to_point([1, 2, 3, 1])
    assert x == [0, 1, 0, 0, 0, 1, 1, 0, 0]
    assert gc.point_to_cycle(3, x) == [1, 2, 3, 1]
    with pytest.raises(gc.GapError) as info:
        gc.point_to_cycle(4, [0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0])
    assert info.value.code == "SubtourError"
    assert gc.feasible_point_count(4) == 9
    lp = gc.export_lp(gc.CostMatrix([[math.inf, 3], [-4.5, math.inf]]))
    assert lp.startswith("\\ Assignment model, n = 2\n")


def test_render_headers():
    m = gc.CostMatrix.parse("GAP 3\ninf 2 6\n10 inf 4\n8 3 inf\n")
    pgm = gc.render(m, "matrix")
    assert pgm == b"P5\n3 3\n255\n" + bytes([255, 0, 128, 255, 255, 64, 191, 32, 255])
    assert gc.render(m, "sorted").startswith(b"P6\n2 3\n255\n")
    assert gc.render(m, "vertex").startswith(b"P5\n2 3\n255\n")


def test_landscape_and_sorted_m():
    m = gc.gen_random_gap(5, 2)
    csv = gc.landscape_csv(m, gc.unrank(1, 5))
    assert csv.startswith("rank,cost,shared_edges\n1,")
    assert csv.count("\n") == 25
    rows = gc.sorted_m(m)
    assert all(len(r) == 4 for r in rows)
    assert all(r[k][0] <= r[k + 1][0] for r in rows for k in range(3))
