from __future__ import annotations

import numpy as np
import pytest

from sublinbodies.distributions import EmpiricalLaw
from sublinbodies.oracles import (
    InfeasibleError,
    LinearProgram,
    UnboundedError,
    dual_avg_quantile,
    dual_expectile,
    dual_one_sided,
    lp_solve,
    mc_support,
)
from sublinbodies.risk import AvgQuantile, EssSup, Mean, avg_quantile, expectile, one_sided_moment
from sublinbodies.shapes import BallShape, BoxShape, L1BallShape, make_rng, regular_polygon
from sublinbodies.verify import random_empirical


def test_lp_trivial():
    value, x = lp_solve(LinearProgram(c=[1.0], A_ub=[[1.0]], b_ub=[1.0]))
    assert value == pytest.approx(1.0)
    assert x[0] == pytest.approx(1.0)


def test_lp_small_textbook():
    # max 3x + 2y, x + y <= 4, x + 3y <= 6, x <= 3
    value, x = lp_solve(LinearProgram(c=[3, 2], A_ub=[[1, 1], [1, 3]], b_ub=[4, 6], ub=[3, np.inf]))
    assert value == pytest.approx(11.0)
    np.testing.assert_allclose(x, [3.0, 1.0], atol=1e-12)


def test_lp_equality_and_minimise():
    value, x = lp_solve(LinearProgram(c=[1, 1], A_eq=[[1, 2]], b_eq=[4], maximize=False))
    assert value == pytest.approx(2.0)


def test_lp_infeasible_and_unbounded():
    with pytest.raises(InfeasibleError):
        lp_solve(LinearProgram(c=[1.0], A_ub=[[1.0]], b_ub=[-1.0]))
    with pytest.raises(UnboundedError):
        lp_solve(LinearProgram(c=[1.0, 0.0], A_ub=[[0.0, 1.0]], b_ub=[1.0]))


def test_dual_avg_quantile_witness():
    law = EmpiricalLaw([1, 2, 3, 4])
    value, w = dual_avg_quantile(law, 0.5)
    assert value == pytest.approx(3.5, abs=1e-12)
    np.testing.assert_allclose(w.gamma, [0, 0, 2, 2], atol=1e-12)
    assert w.check(law, upper=2.0)


def test_dual_avg_quantile_alpha_one():
    law = EmpiricalLaw([1, 5, 7], [0.2, 0.3, 0.5])
    value, w = dual_avg_quantile(law, 1.0)
    assert value == pytest.approx(law.mean, abs=1e-12)
    np.testing.assert_allclose(w.gamma, 1.0, atol=1e-12)


def test_dual_avg_quantile_partial_atom():
    law = EmpiricalLaw([0.0, 1.0], [0.9, 0.1])
    value, _ = dual_avg_quantile(law, 0.25)
    assert value == pytest.approx(0.4, abs=1e-12)


def test_dual_one_sided_two_point():
    assert dual_one_sided(EmpiricalLaw([0.0, 1.0]), 1.0) == pytest.approx(0.75, abs=1e-12)
    law = EmpiricalLaw([1, 5, 7], [0.2, 0.3, 0.5])
    assert dual_one_sided(law, 0.0) == pytest.approx(law.mean, abs=1e-12)


def test_dual_one_sided_random():
    rng = make_rng(3)
    for _ in range(20):
        law = random_empirical(rng, 8)
        assert dual_one_sided(law, 0.5) == pytest.approx(one_sided_moment(law, 1.0, 0.5), abs=1e-8)


def test_dual_expectile_values():
    law = EmpiricalLaw([1, 5, 7], [0.2, 0.3, 0.5])
    assert dual_expectile(law, 0.5) == pytest.approx(law.mean, abs=1e-10)
    assert dual_expectile(EmpiricalLaw([0.0, 1.0]), 0.75) == pytest.approx(0.75, abs=1e-10)


def test_dual_expectile_discretised_uniform():
    law = EmpiricalLaw((np.arange(64) + 0.5) / 64)
    assert dual_expectile(law, 0.9) == pytest.approx(0.75, abs=0.01)


def test_duals_match_direct_random():
    rng = make_rng(11)
    for _ in range(30):
        law = random_empirical(rng, 12)
        alpha = float(rng.uniform(0.05, 1.0))
        tau = float(rng.uniform(0.5, 0.95))
        assert dual_avg_quantile(law, alpha)[0] == pytest.approx(avg_quantile(law, alpha), abs=1e-8)
        assert dual_expectile(law, tau) == pytest.approx(expectile(law, tau), abs=1e-7)


def test_greedy_witness_first_order_optimal():
    rng = make_rng(5)
    for _ in range(50):
        law = random_empirical(rng, 10)
        alpha = float(rng.uniform(0.1, 0.9))
        value, w = dual_avg_quantile(law, alpha)
        g, p, v = w.gamma, law.weights, law.values
        # moving mass dt from atom i to atom j keeps E gamma = 1
        for i in range(v.size):
            for j in range(v.size):
                if i == j or g[i] <= 1e-12 or g[j] >= 1 / alpha - 1e-12:
                    continue
                assert v[j] - v[i] <= 1e-12


def test_mc_support_l1_ball():
    est = mc_support(L1BallShape([0.0, 0.0], 1.0), AvgQuantile(0.5), [1.0, 0.0], 10**6, seed=1)
    assert abs(est.value - 1 / 3) <= 3 * est.std_error


def test_mc_support_ball_mean():
    est = mc_support(BallShape([0.0, 0.0], 1.0), Mean(), [0.6, 0.8], 10**4, seed=2)
    assert abs(est.value) <= 3 * est.std_error


def test_mc_support_box_ess_sup_monotone():
    box = BoxShape([0.0, 0.0], [1.0, 0.5])
    vals = [mc_support(box, EssSup(), [1.0, 0.0], n, seed=4).value for n in (100, 1000, 10000, 100000)]
    assert all(v <= 1.0 for v in vals)
    assert vals[-1] > vals[0]


def test_mc_support_coverage():
    hexagon = regular_polygon(6)
    exact = avg_quantile(hexagon.projection_law(np.array([1.0, 0.0])), 0.3)
    hits = 0
    for s in range(100):
        est = mc_support(hexagon, AvgQuantile(0.3), [1.0, 0.0], 4000, seed=s, n_boot=50)
        hits += abs(est.value - exact) <= 4 * est.std_error
    assert hits >= 95
