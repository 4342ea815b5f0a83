from __future__ import annotations

import math

import numpy as np
import pytest

from sublinbodies.distributions import DomainError, EmpiricalLaw, uniform_law
from sublinbodies.risk import (
    AvgQuantile,
    EssSup,
    Expectile,
    MaxExt,
    Mean,
    OneSidedMoment,
    Spectral,
    SpectralMeasure,
    avg_quantile,
    avg_quantiles,
    ess_sup,
    evaluate,
    expectile,
    expectile_family,
    geometric_max_law,
    kusuoka_sup,
    max_ext_avg_quantile_direct,
    one_sided_family,
    one_sided_moment,
    one_sided_sup_breakpoints,
    orlicz_norm,
    spec_from_json,
    spectral_density,
    spectral_value,
)
from sublinbodies.shapes import BallShape, L1BallShape

E1 = np.array([1.0, 0.0])
TWO_POINT = EmpiricalLaw([0.0, 1.0])

# independent oracle values (scipy quad + brentq on closed-form densities)
L1_EXPECTILE_08 = 0.22908300291522957
DISK_EXPECTILE_09 = 0.4338669006033358


# average quantiles


def test_avg_quantile_top_two():
    assert avg_quantile(EmpiricalLaw([1, 2, 3, 4]), 0.5) == pytest.approx(3.5, abs=1e-14)


def test_avg_quantile_l1_marginal():
    law = L1BallShape([0.0, 0.0], 1.0).projection_law(E1)
    assert avg_quantile(law, 0.5) == pytest.approx(1 / 3, abs=1e-12)


@pytest.mark.parametrize("alpha", [0.1, 0.5, 0.9])
def test_avg_quantile_uniform(alpha):
    assert avg_quantile(uniform_law(-0.8, 0.8), alpha) == pytest.approx(0.8 * (1 - alpha), abs=1e-13)


def test_avg_quantile_alpha_one_is_mean():
    law = EmpiricalLaw([1, 5, 7], [0.2, 0.3, 0.5])
    assert avg_quantile(law, 1.0) == pytest.approx(law.mean, abs=1e-14)


def test_avg_quantile_rejects_zero():
    with pytest.raises(DomainError):
        avg_quantile(TWO_POINT, 0.0)


def test_avg_quantiles_vectorised():
    law = EmpiricalLaw([0.3, -1.0, 2.5, 4.0])
    a = np.array([0.1, 0.25, 0.6, 1.0])
    np.testing.assert_allclose(avg_quantiles(law, a), [avg_quantile(law, x) for x in a], atol=1e-14)


def test_avg_quantile_increases_to_ess_sup():
    law = uniform_law(-1, 1)
    vals = [avg_quantile(law, 2.0**-k) for k in range(1, 15)]
    assert all(b >= a for a, b in zip(vals, vals[1:]))
    assert vals[-1] == pytest.approx(1.0, abs=1e-4)


# spectral values


def test_spectral_point_mass():
    law = EmpiricalLaw([0.3, -1.0, 2.5, 4.0])
    assert spectral_value(law, SpectralMeasure.point(0.3)) == pytest.approx(avg_quantile(law, 0.3), abs=1e-14)


def test_spectral_expected_maximum_uniform():
    assert spectral_value(uniform_law(0, 1), SpectralMeasure.expected_maximum(2)) == pytest.approx(2 / 3, abs=1e-12)


def test_spectral_uniform_density_matches_riemann_sum():
    law = TWO_POINT
    t = (np.arange(10**6) + 0.5) / 10**6
    riemann = float(np.mean(avg_quantiles(law, t)))
    assert spectral_value(law, SpectralMeasure.uniform()) == pytest.approx(riemann, abs=1e-6)


def test_spectral_uniform_density_on_uniform_law():
    # phi(t) = -log t, int (1 - t)(-log t) dt = 3/4
    assert spectral_value(uniform_law(0, 1), SpectralMeasure.uniform()) == pytest.approx(0.75, abs=1e-11)


def test_spectral_density_point_mass():
    phi = spectral_density(SpectralMeasure.point(0.25)).phi
    np.testing.assert_allclose(phi(np.array([0.1, 0.2, 0.3, 0.9])), [4.0, 4.0, 0.0, 0.0])


def test_spectral_density_expected_maximum():
    phi = spectral_density(SpectralMeasure.expected_maximum(4)).phi
    t = np.linspace(0.01, 0.99, 17)
    np.testing.assert_allclose(phi(t), 4 * (1 - t) ** 3, atol=1e-12)


def test_spectral_density_mean():
    phi = spectral_density(SpectralMeasure.point(1.0)).phi
    np.testing.assert_allclose(phi(np.array([0.0, 0.5, 0.999])), 1.0)


def test_spectral_measure_mass_checked():
    with pytest.raises(DomainError):
        SpectralMeasure(atoms=((0.5, 0.7),))


# one-sided moments


@pytest.mark.parametrize("a", [0.0, 0.3, 1.0])
def test_one_sided_two_point(a):
    assert one_sided_moment(TWO_POINT, 1.0, a) == pytest.approx(0.5 + a / 4, abs=1e-14)


def test_one_sided_symmetric_absolute_moment():
    law = EmpiricalLaw([-2.0, -0.5, 0.5, 2.0])
    assert one_sided_moment(law, 1.0, 1.0) == pytest.approx(law.mean + 0.5 * 1.25, abs=1e-14)


def test_one_sided_p2_l1_marginal():
    # 0.5 * sqrt(int_0^1 s^2 (1 - s) ds)
    law = L1BallShape([0.0, 0.0], 1.0).projection_law(E1)
    assert one_sided_moment(law, 2.0, 0.5) == pytest.approx(0.5 * math.sqrt(1 / 12), abs=1e-12)


# expectiles


def test_expectile_half_is_mean():
    law = EmpiricalLaw([1, 5, 7], [0.2, 0.3, 0.5])
    assert expectile(law, 0.5) == pytest.approx(law.mean, abs=1e-12)


def test_expectile_uniform():
    assert expectile(uniform_law(0, 1), 0.9) == pytest.approx(0.75, abs=1e-12)


@pytest.mark.parametrize("tau", [0.6, 0.75, 0.95])
def test_expectile_two_point(tau):
    assert expectile(TWO_POINT, tau) == pytest.approx(tau, abs=1e-12)


def test_expectile_l1_marginal():
    law = L1BallShape([0.0, 0.0], 1.0).projection_law(E1)
    assert expectile(law, 0.8) == pytest.approx(L1_EXPECTILE_08, abs=1e-9)


def test_expectile_disk_marginal():
    law = BallShape([0.0, 0.0], 1.0).projection_law(E1)
    assert expectile(law, 0.9) == pytest.approx(DISK_EXPECTILE_09, abs=1e-9)


# essential supremum


def test_ess_sup():
    assert ess_sup(EmpiricalLaw([1, 2, 3, 4])) == 4.0
    assert ess_sup(uniform_law(-1, 1)) == 1.0


# maximum extensions


@pytest.mark.parametrize("m", range(1, 11))
def test_max_ext_mean_uniform(m):
    assert evaluate(MaxExt(Mean(), m), uniform_law(0, 1)) == pytest.approx(m / (m + 1), abs=1e-10)


def test_max_ext_avg_quantile_direct_route():
    law = EmpiricalLaw([1, 2, 3, 4, 5])
    canonical = evaluate(MaxExt(AvgQuantile(0.4), 3), law)
    assert max_ext_avg_quantile_direct(law, 0.4, 3) == pytest.approx(canonical, abs=1e-9)


def test_max_ext_composes():
    law = EmpiricalLaw([0.3, -1.0, 2.5, 4.0], [0.1, 0.2, 0.3, 0.4])
    for spec in [Mean(), AvgQuantile(0.3), Expectile(0.7), OneSidedMoment(2.0, 0.5)]:
        assert evaluate(MaxExt(MaxExt(spec, 2), 3), law) == pytest.approx(evaluate(MaxExt(spec, 6), law), abs=1e-12)


def test_constants_are_fixed():
    law = EmpiricalLaw([2.5])
    for spec in [Mean(), AvgQuantile(0.2), OneSidedMoment(3.0, 1.0), Expectile(0.9), EssSup(),
                 MaxExt(Mean(), 4), Spectral(SpectralMeasure.uniform())]:
        assert evaluate(spec, law) == pytest.approx(2.5, abs=1e-12)


# Kusuoka families


def test_kusuoka_singleton():
    law = EmpiricalLaw([0.3, -1.0, 2.5])
    nu = SpectralMeasure.expected_maximum(3)
    assert kusuoka_sup(law, [nu]) == spectral_value(law, nu)


def test_one_sided_family_sup():
    ts = np.linspace(0.0, 1.0, 1001)
    assert kusuoka_sup(TWO_POINT, one_sided_family(1.0, ts)) == pytest.approx(0.75, abs=1e-12)


def test_one_sided_breakpoint_identity():
    law = EmpiricalLaw([0.3, -1.0, 2.5, 4.0], [0.1, 0.2, 0.3, 0.4])
    for a in [0.2, 0.7, 1.0]:
        assert one_sided_sup_breakpoints(law, a) == pytest.approx(one_sided_moment(law, 1.0, a), abs=1e-10)


def test_expectile_family_uniform():
    tau = 0.75
    ss = np.linspace(0.0, 2 - 1 / tau, 1000)
    assert kusuoka_sup(uniform_law(0, 1), expectile_family(tau, ss)) == pytest.approx(
        expectile(uniform_law(0, 1), tau), abs=1e-4)


# Orlicz norms


def test_orlicz_positive_part_atom():
    assert orlicz_norm(EmpiricalLaw([2.0]), lambda x: np.maximum(x, 0.0)) == pytest.approx(2.0, abs=1e-9)


def test_orlicz_square_uniform():
    assert orlicz_norm(uniform_law(0, 1), lambda x: x**2) == pytest.approx(1 / math.sqrt(3), abs=1e-9)


def test_orlicz_positive_part_is_mean():
    law = EmpiricalLaw([0.5, 1.0, 3.0])
    assert orlicz_norm(law, lambda x: np.maximum(x, 0.0)) == pytest.approx(law.mean, abs=1e-9)


# geometric maximum


def test_geometric_max_law_lam_one():
    law = EmpiricalLaw([0.0, 1.0, 2.0])
    g = geometric_max_law(law, 1.0)
    np.testing.assert_allclose(g.weights, law.weights)


def test_geometric_max_law_mean_between():
    law = EmpiricalLaw([0.0, 1.0, 2.0])
    g = geometric_max_law(law, 0.5)
    assert law.mean < g.mean < 2.0


# JSON


@pytest.mark.parametrize("spec", [
    Mean(), AvgQuantile(0.5), OneSidedMoment(2.0, 0.5), Expectile(0.9), EssSup(), MaxExt(AvgQuantile(0.2), 3),
    Spectral(SpectralMeasure(atoms=((0.5, 0.5),), pieces=((0.0, 1.0, (0.5,)),))),
])
def test_spec_json_round_trip(spec):
    back = spec_from_json(spec.to_json())
    law = EmpiricalLaw([0.3, -1.0, 2.5, 4.0])
    assert evaluate(back, law) == pytest.approx(evaluate(spec, law), abs=1e-14)


def test_spec_json_errors():
    with pytest.raises(DomainError):
        spec_from_json({"type": "nope"})
    with pytest.raises(DomainError):
        spec_from_json({"type": "avg_quantile"})
    with pytest.raises(DomainError):
        AvgQuantile(1.5)
    with pytest.raises(DomainError):
        Expectile(0.3)
