from __future__ import annotations

import math

import numpy as np
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from sublinbodies.distributions import EmpiricalLaw, independent_sum, max_law, uniform_law
from sublinbodies.geometry import (
    DirectionGrid,
    contains,
    convex_hull,
    exact_avg_quantile_body,
    hausdorff,
    minkowski_sum,
    polar,
    sublinearity_violation,
)
from sublinbodies.risk import (
    AvgQuantile,
    MaxExt,
    SpectralMeasure,
    avg_quantile,
    distortion_value,
    evaluate,
    one_sided_moment,
    one_sided_sup_breakpoints,
    spectral_density,
    spectral_value,
)
from sublinbodies.shapes import L1BallShape, make_rng, regular_polygon
from sublinbodies.transforms import support_field
from sublinbodies.verify import SPEC_KINDS, random_measure, random_sample, random_spec

PROPS = settings(deadline=None, max_examples=60)

finite = st.floats(-10.0, 10.0, allow_nan=False, allow_infinity=False)
levels = st.floats(1e-6, 1.0 - 1e-6)
seeds = st.integers(0, 2**32 - 1)


@st.composite
def empirical_laws(draw, max_atoms=16):
    n = draw(st.integers(1, max_atoms))
    values = draw(st.lists(finite, min_size=n, max_size=n))
    weights = draw(st.lists(st.floats(0.05, 1.0), min_size=n, max_size=n))
    w = np.asarray(weights)
    return EmpiricalLaw(values, w / w.sum())


@st.composite
def coupled_samples(draw, max_atoms=16):
    """Two random variables on a common finite probability space."""
    n = draw(st.integers(1, max_atoms))
    b = np.asarray(draw(st.lists(finite, min_size=n, max_size=n)))
    eta = np.asarray(draw(st.lists(finite, min_size=n, max_size=n)))
    w = np.asarray(draw(st.lists(st.floats(0.05, 1.0), min_size=n, max_size=n)))
    return b, eta, w / w.sum()


# distributions


@PROPS
@given(empirical_laws(), levels)
def test_galois_pair(law, t):
    q = law.quantile(t)
    assert law.cdf(q) >= t - 1e-12
    # just below the quantile the cdf has not reached t
    below = np.nextafter(q, -np.inf) - 1e-9 * max(1.0, abs(q))
    assert law.cdf(below) < t + 1e-12


@PROPS
@given(empirical_laws(), st.lists(st.floats(0.0, 1.0), min_size=3, max_size=3, unique=True))
def test_quantile_integral_additivity(law, pts):
    a, b, c = sorted(pts)
    assume(b - a > 1e-9 and c - b > 1e-9)
    whole = law.quantile_integral(a, c)
    parts = law.quantile_integral(a, b) + law.quantile_integral(b, c)
    assert abs(whole - parts) <= 1e-12 * max(1.0, float(np.max(np.abs(law.values))))


@PROPS
@given(st.integers(1, 8), levels)
def test_max_law_quantile(m, t):
    law = uniform_law(-1.0, 2.0)
    assert max_law(law, m).quantile(t) == law.quantile(t ** (1.0 / m))


@PROPS
@given(st.integers(3, 9), levels)
def test_symmetric_projection_quantiles(k, t):
    law = regular_polygon(2 * k).projection_law(np.array([math.cos(0.3), math.sin(0.3)]))
    assert abs(law.quantile(t) + law.quantile(1 - t)) <= 1e-10


# sublinear expectations


@PROPS
@given(coupled_samples(), seeds, st.sampled_from(SPEC_KINDS), finite, st.floats(0.0, 5.0))
def test_axioms(sample, seed, kind, shift, c):
    b, eta, w = sample
    spec = random_spec(make_rng(seed), kind)
    e = lambda x: evaluate(spec, EmpiricalLaw(x, w))
    base = e(b)
    scale = 1.0 + float(np.max(np.abs(b)) + np.max(np.abs(eta)))
    tol = 1e-10 * scale * (1.0 + c)
    assert abs(e(b + shift) - base - shift) <= tol * (1 + abs(shift))
    assert abs(e(c * b) - c * base) <= tol
    assert e(b + eta) <= base + e(eta) + tol
    assert e(np.maximum(b, eta)) >= base - tol
    assert float(np.dot(w, b)) <= base + tol


@PROPS
@given(empirical_laws(), st.lists(st.floats(0.01, 1.0), min_size=2, max_size=2))
def test_avg_quantile_nonincreasing(law, alphas):
    lo, hi = sorted(alphas)
    assert avg_quantile(law, lo) >= avg_quantile(law, hi) - 1e-12
    assert spectral_value(law, SpectralMeasure.point(1.0)) == law.mean


@PROPS
@given(empirical_laws(), seeds)
def test_spectral_round_trip(law, seed):
    nu = random_measure(make_rng(seed))
    via_average = spectral_value(law, nu)
    via_density = distortion_value(law, spectral_density(nu).Phi)
    assert abs(via_average - via_density) <= 1e-9 * max(1.0, float(np.max(np.abs(law.values))))


@PROPS
@given(empirical_laws(), st.floats(0.0, 1.0))
def test_one_sided_breakpoint_identity(law, a):
    assert abs(one_sided_moment(law, 1.0, a) - one_sided_sup_breakpoints(law, a)) <= 1e-10 * max(
        1.0, float(np.max(np.abs(law.values))))


@PROPS
@given(empirical_laws(max_atoms=8), seeds, st.integers(1, 4), st.integers(1, 4))
def test_max_ext_composes(law, seed, m, k):
    spec = random_spec(make_rng(seed), "avg_quantile")
    nested = evaluate(MaxExt(MaxExt(spec, m), k), law)
    flat = evaluate(MaxExt(spec, m * k), law)
    assert abs(nested - flat) <= 1e-12 * max(1.0, float(np.max(np.abs(law.values))))


# bodies


@settings(deadline=None, max_examples=25)
@given(seeds, st.floats(0.05, 1.0))
def test_affine_equivariance(seed, alpha):
    rng = make_rng(seed)
    mu = random_sample(rng, 20)
    A = rng.normal(size=(2, 2))
    assume(abs(np.linalg.det(A)) > 0.1)
    b = rng.normal(size=2)
    P = exact_avg_quantile_body(mu, alpha)
    Q = exact_avg_quantile_body(mu.affine(A, b), alpha)
    assert hausdorff(P.transform(A, b), Q) <= 1e-9 * max(1.0, Q.diameter)


@settings(deadline=None, max_examples=25)
@given(seeds, st.floats(0.05, 1.0))
def test_subadditivity(seed, alpha):
    rng = make_rng(seed)
    mu, eta = random_sample(rng, 8), random_sample(rng, 8)
    S = exact_avg_quantile_body(independent_sum(mu, eta), alpha)
    M = minkowski_sum(exact_avg_quantile_body(mu, alpha), exact_avg_quantile_body(eta, alpha))
    assert contains(M, S, tol=1e-9)


@settings(deadline=None, max_examples=25)
@given(seeds)
def test_singleton_at_one(seed):
    mu = random_sample(make_rng(seed), 20)
    P = exact_avg_quantile_body(mu, 1.0)
    assert P.diameter <= 1e-9
    np.testing.assert_allclose(P.vertices[0], mu.mean, atol=1e-9)


@settings(deadline=None, max_examples=25)
@given(seeds, st.lists(st.floats(0.02, 1.0), min_size=2, max_size=2))
def test_monotone_nesting(seed, alphas):
    lo, hi = sorted(alphas)
    mu = random_sample(make_rng(seed), 25)
    assert contains(exact_avg_quantile_body(mu, lo), exact_avg_quantile_body(mu, hi), tol=1e-9)


@settings(deadline=None, max_examples=30)
@given(seeds)
def test_polar_involution(seed):
    rng = make_rng(seed)
    pts = rng.normal(size=(int(rng.integers(3, 20)), 2))
    P = convex_hull(np.vstack([pts, 0.2 * np.array([[1, 0], [-1, 0], [0, 1], [0, -1]])]))
    assert hausdorff(polar(polar(P)), P) <= 1e-9 * P.diameter


@settings(deadline=None, max_examples=20)
@given(seeds, st.floats(0.05, 1.0))
def test_support_field_sublinear(seed, alpha):
    mu = random_sample(make_rng(seed), 15)
    f = support_field(mu, AvgQuantile(alpha), DirectionGrid.uniform(48))
    assert sublinearity_violation(f) <= 1e-9
    g = support_field(L1BallShape([0.0, 0.0], 1.0), AvgQuantile(alpha), DirectionGrid.uniform(24))
    assert sublinearity_violation(g) <= 1e-9
