from __future__ import annotations

import math

import numpy as np
import pytest

from sublinbodies.distributions import EmpiricalLaw, WeightedSample, uniform_law
from sublinbodies.geometry import DirectionGrid, contains, hausdorff, minkowski_sum
from sublinbodies.risk import (
    AvgQuantile,
    Expectile,
    Mean,
    OneSidedMoment,
    SpectralMeasure,
    avg_quantile,
    expectile,
    one_sided_family,
)
from sublinbodies.shapes import BallShape, BoxShape, L1BallShape, make_rng, regular_polygon
from sublinbodies.transforms import (
    AtomicDepthWarning,
    centroid_body,
    centroid_via_ulam,
    classical_centroid_body,
    depth_region,
    expectile_transform,
    expected_polytope,
    floating_like_body,
    integrated_depth,
    kusuoka_body,
    max_extension_spectral_family,
    support_field,
    ulam_floating,
)
from sublinbodies.verify import random_sample

E1 = np.array([1.0, 0.0])
SQUARE = BoxShape([0.0, 0.0], [1.0, 1.0])
# independent oracle: E max of two/three uniform points of [-1,1]^2 projected on (1,1)/sqrt(2)
EP2_DIAGONAL = 0.32998316474908146
EP3_DIAGONAL = 0.49497474717019885
DISK_EXPECTILE_09 = 0.4338669006033358


def grid_support(P, g):
    return P.support(g.vectors)


# floating-like bodies


def test_ball_gives_ball():
    g = DirectionGrid.uniform(64)
    f = support_field(BallShape([0.0, 0.0], 2.0), AvgQuantile(0.3), g)
    r = avg_quantile(BallShape([0.0, 0.0], 2.0).projection_law(E1), 0.3)
    np.testing.assert_allclose(f.values, r, atol=1e-9)


def test_example_values_l1_and_box():
    g = DirectionGrid.uniform(720)
    hK = floating_like_body(L1BallShape([0.0, 0.0], 1.0), AvgQuantile(0.5), g).field.values[0]
    hL = floating_like_body(BoxShape([0.0, 0.0], [0.8, 0.1]), AvgQuantile(0.5), g).field.values[0]
    assert hK == pytest.approx(1 / 3, abs=1e-9)
    assert hL == pytest.approx(0.4, abs=1e-12)


def test_mean_body_is_barycenter():
    K = regular_polygon(5, center=(0.3, -0.2))
    est = floating_like_body(K, Mean(), 90)
    assert est.body.diameter <= 1e-9
    np.testing.assert_allclose(est.body.centroid, K.barycenter, atol=1e-9)


def test_discrete_exact_path():
    mu = random_sample(make_rng(1), 20)
    est = floating_like_body(mu, AvgQuantile(0.3), 256)
    assert est.exact is not None and est.gap == 0.0


def test_sandwich_contains_true_body():
    K = regular_polygon(7)
    est = floating_like_body(K, AvgQuantile(0.4), 256)
    assert contains(est.outer, est.inner, tol=1e-9)
    assert hausdorff(est.inner, est.outer) == pytest.approx(est.gap)


# depth regions


def test_depth_square_offset():
    P = depth_region(SQUARE, 0.25, 4)
    assert P.support(E1) == pytest.approx(0.5, abs=1e-12)


def test_depth_disk_empty_past_half():
    assert depth_region(BallShape([0.0, 0.0], 1.0), 0.6, 64).is_empty


def test_depth_warns_on_atoms():
    mu = WeightedSample([[0, 0], [1, 0], [0, 1]])
    with pytest.warns(AtomicDepthWarning):
        depth_region(mu, 0.3, 16)


def test_depth_symmetric_support_is_quantile():
    g = DirectionGrid.uniform(256)
    K = regular_polygon(6, phase=0.3)
    P = depth_region(K, 0.3, g)
    q = np.array([K.projection_law(u).quantile(0.7) for u in g.vectors])
    np.testing.assert_allclose(P.support(g.vectors), q, atol=1e-9)


def test_integrated_depth_between_bodies():
    mu = random_sample(make_rng(3), 30)
    g = DirectionGrid.uniform(256)
    with pytest.warns(AtomicDepthWarning):
        I = integrated_depth(mu, 0.2, g)
        D = depth_region(mu, 0.2, g)
    E = floating_like_body(mu, AvgQuantile(0.2), g).body
    hI = I.field.values
    assert np.all(grid_support(D, g) <= hI + 1e-9)
    assert np.all(hI <= grid_support(E, g) + 1e-9)


# Ulam floating bodies


def test_ulam_full_volume_barycenter():
    K = regular_polygon(5)
    est = ulam_floating(K, K.volume, 64)
    assert est.body.diameter <= 1e-9


def test_ulam_scaling():
    g = DirectionGrid.uniform(128)
    K, K2 = BoxShape([0.0, 0.0], [1.0, 1.0]), BoxShape([0.0, 0.0], [2.0, 2.0])
    a = ulam_floating(K2, 1.2, g).field.values
    b = 2 * ulam_floating(K, 1.2 / 4, g).field.values
    np.testing.assert_allclose(a, b, atol=1e-12)


def test_alpha_scaled_bodies_grow():
    g = DirectionGrid.uniform(128)
    prev = None
    for a in [0.1, 0.2, 0.3, 0.4, 0.5]:
        h = a * floating_like_body(SQUARE, AvgQuantile(a), g).field.values
        if prev is not None:
            assert np.all(prev <= h + 1e-12)
        prev = h


# centroid bodies


def test_disk_centroid_radius():
    f = centroid_body(BallShape([0.0, 0.0], 1.0), 1.0, 1.0, 64).field
    np.testing.assert_allclose(f.values, 2 / (3 * math.pi), atol=1e-9)


def test_centroid_a_zero_is_barycenter():
    K = regular_polygon(4, center=(1.0, 2.0))
    assert centroid_body(K, 1.0, 0.0, 32).body.diameter <= 1e-9


def test_symmetric_centroid_p_norm():
    # symmetric law: e_{p,1} = 2^{-1/p} ||b||_p
    law = L1BallShape([0.0, 0.0], 1.0).projection_law(E1)
    for p, norm in [(1.0, 1 / 3), (2.0, math.sqrt(1 / 6))]:
        h = centroid_body(L1BallShape([0.0, 0.0], 1.0), p, 1.0, 4).field.values[0]
        assert h == pytest.approx(2 ** (-1 / p) * norm, abs=1e-10)
    assert law.mean == pytest.approx(0.0, abs=1e-15)


def test_centroid_via_ulam_disk():
    g = DirectionGrid.uniform(128)
    E = centroid_via_ulam(BallShape([0.0, 0.0], 1.0), grid=g)
    C = classical_centroid_body(BallShape([0.0, 0.0], 1.0), g)
    assert hausdorff(E.body, C.body) <= E.gap + C.gap + 1e-9


def test_centroid_via_ulam_degenerate_grid():
    E = centroid_via_ulam(SQUARE, alphas=np.array([1.0]), grid=16)
    assert E.body.diameter <= 1e-12


# expectiles


def test_expectile_half_barycenter():
    direct, rep = expectile_transform(regular_polygon(5, center=(0.5, 0.0)), 0.5, 32, 32)
    assert direct.body.diameter <= 1e-9


def test_expectile_disk_two_paths():
    direct, rep = expectile_transform(BallShape([0.0, 0.0], 1.0), 0.9, 32, 256)
    np.testing.assert_allclose(direct.field.values, DISK_EXPECTILE_09, atol=1e-9)
    assert np.max(np.abs(rep.field.values - direct.field.values)) <= 1e-3


def test_expectile_square_nested():
    direct, _ = expectile_transform(SQUARE, 0.75, 64, 64)
    assert contains(SQUARE.as_polygon(), direct.body, tol=1e-9)
    assert contains(direct.body, SQUARE.as_polygon().scaled(0.0), tol=1e-9)


# expected polytopes


def test_expected_polytope_m1():
    assert expected_polytope(regular_polygon(5, center=(0.2, 0.1)), 1, 32).body.diameter <= 1e-9


def test_expected_polytope_square_values():
    g = DirectionGrid(np.array([[1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]))
    vals = expected_polytope(SQUARE, 2, g).field.values
    assert vals[0] == pytest.approx(1 / 3, abs=1e-9)
    assert vals[1] == pytest.approx(EP2_DIAGONAL, abs=1e-8)
    assert expected_polytope(SQUARE, 3, g).field.values[1] == pytest.approx(EP3_DIAGONAL, abs=1e-8)


def test_expected_polytope_nested():
    g = DirectionGrid.uniform(16)
    prev = None
    for m in [2, 4, 8, 16]:
        h = expected_polytope(SQUARE, m, g).field.values
        if prev is not None:
            assert np.all(prev <= h + 1e-9)
        assert np.all(h <= SQUARE.as_polygon().support(g.vectors) + 1e-12)
        prev = h


# Kusuoka bodies


def test_kusuoka_singleton():
    mu = random_sample(make_rng(2), 15)
    g = DirectionGrid.uniform(64)
    K1 = kusuoka_body(mu, [SpectralMeasure.point(0.3)], g).field.values
    np.testing.assert_allclose(K1, floating_like_body(mu, AvgQuantile(0.3), g).field.values, atol=1e-12)


def test_kusuoka_one_sided_family():
    mu = random_sample(make_rng(4), 12, weighted=False)
    g = DirectionGrid.uniform(64)
    n = mu.size
    ts = np.concatenate([[0.0], np.arange(1, n + 1) / n])
    K = kusuoka_body(mu, one_sided_family(1.0, ts), g).field.values
    F = floating_like_body(mu, OneSidedMoment(1.0, 1.0), g).field.values
    np.testing.assert_allclose(K, F, atol=1e-8)


def test_kusuoka_mean():
    mu = random_sample(make_rng(5), 10)
    K = kusuoka_body(mu, [SpectralMeasure.point(1.0)], 32)
    assert K.body.diameter <= 1e-9


# fingerprints


def test_fingerprint_mean_and_uniform():
    law = EmpiricalLaw([0.3, -1.0, 2.5])
    assert max_extension_spectral_family(law, 0.0, 1) == pytest.approx(law.mean, abs=1e-14)
    for m in range(1, 6):
        assert max_extension_spectral_family(uniform_law(0, 1), 0.0, m) == pytest.approx(m / (m + 1), abs=1e-10)


def test_fingerprint_distinguishes():
    a, b = EmpiricalLaw([-1.0, 1.0]), EmpiricalLaw([-2.0, 0.0, 2.0])
    diffs = [abs(max_extension_spectral_family(a, 0.0, m) - max_extension_spectral_family(b, 0.0, m))
             for m in range(1, 9)]
    assert diffs[0] < 1e-14
    assert max(diffs) > 1e-3


# axioms at body level


def test_affine_equivariance():
    mu = random_sample(make_rng(6), 20)
    A = np.array([[1.5, 0.3], [-0.2, 0.8]])
    b = np.array([0.4, -1.0])
    P = floating_like_body(mu, AvgQuantile(0.35), 64).body
    Q = floating_like_body(mu.affine(A, b), AvgQuantile(0.35), 64).body
    assert hausdorff(P.transform(A, b), Q) <= 1e-9


def test_subadditivity_of_independent_sum():
    from sublinbodies.distributions import independent_sum

    rng = make_rng(7)
    mu, eta = random_sample(rng, 8), random_sample(rng, 8)
    P = floating_like_body(mu, AvgQuantile(0.3), 64).body
    Q = floating_like_body(eta, AvgQuantile(0.3), 64).body
    S = floating_like_body(independent_sum(mu, eta), AvgQuantile(0.3), 64).body
    assert contains(minkowski_sum(P, Q), S, tol=1e-9)


def test_expectile_scalar_matches_body():
    K = BallShape([0.0, 0.0], 1.0)
    h = floating_like_body(K, Expectile(0.9), 8).field.values
    np.testing.assert_allclose(h, expectile(K.projection_law(E1), 0.9), atol=1e-12)
