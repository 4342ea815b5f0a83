"""Law-determined sublinear expectations of scalar laws.

Every expectation is described by a small frozen dataclass (an
:class:`ExpectationSpec`) and evaluated by :func:`evaluate`.  Spectral-type
expectations (mean, average quantile, spectral mixtures, essential supremum
and their maximum extensions) also expose a distortion ``Phi`` with
``e(beta) = int_0^1 q_{1-t} dPhi(t)``; for empirical laws that gives an exact
finite sum used by the set-valued code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy import integrate, optimize

from .distributions import (
    ContinuousLaw,
    DomainError,
    EmpiricalLaw,
    ScalarLaw,
    max_law,
)

# ---------------------------------------------------------------------------
# spectral measures


@dataclass(frozen=True)
class DensityPiece:
    """Polynomial density ``sum_k coeffs[k] s^k`` on ``(lo, hi]``."""

    lo: float
    hi: float
    coeffs: tuple

    def __post_init__(self):
        if not (0.0 <= self.lo < self.hi <= 1.0):
            raise DomainError("density piece must satisfy 0 <= lo < hi <= 1")
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))

    def __call__(self, s):
        s = np.asarray(s, dtype=float)
        out = np.polynomial.polynomial.polyval(s, self.coeffs)
        return np.where((s > self.lo) & (s <= self.hi), out, 0.0)

    def int_g(self, a: float, b: float) -> float:
        """``int_a^b g`` clipped to the piece."""
        a, b = max(a, self.lo), min(b, self.hi)
        if b <= a:
            return 0.0
        return float(sum(c * (b ** (k + 1) - a ** (k + 1)) / (k + 1) for k, c in enumerate(self.coeffs)))

    def int_g_over_s(self, a: float, b: float) -> float:
        """``int_a^b g(s)/s ds`` clipped to the piece (``+inf`` if it diverges)."""
        a, b = max(a, self.lo), min(b, self.hi)
        if b <= a:
            return 0.0
        c0 = self.coeffs[0] if self.coeffs else 0.0
        out = 0.0
        if c0 != 0.0:
            if a == 0.0:
                return math.inf if c0 > 0 else -math.inf
            out += c0 * math.log(b / a)
        for k, c in enumerate(self.coeffs[1:], start=1):
            out += c * (b**k - a**k) / k
        return float(out)

    def int_g_vec(self, a, b):
        """Array version of :meth:`int_g`."""
        a = np.maximum(np.asarray(a, dtype=float), self.lo)
        b = np.minimum(np.asarray(b, dtype=float), self.hi)
        b = np.maximum(a, b)
        return sum(c * (b ** (k + 1) - a ** (k + 1)) / (k + 1) for k, c in enumerate(self.coeffs)) + 0.0 * a

    def int_g_over_s_vec(self, a, b):
        """Array version of :meth:`int_g_over_s`."""
        a = np.maximum(np.asarray(a, dtype=float), self.lo)
        b = np.minimum(np.asarray(b, dtype=float), self.hi)
        b = np.maximum(a, b)
        out = np.zeros(np.broadcast(a, b).shape)
        c0 = self.coeffs[0] if self.coeffs else 0.0
        if c0 != 0.0:
            with np.errstate(divide="ignore", invalid="ignore"):
                lg = np.where(b > a, np.log(b / a), 0.0)
            out = out + c0 * lg
        for k, c in enumerate(self.coeffs[1:], start=1):
            out = out + c * (b**k - a**k) / k
        return out


@dataclass(frozen=True)
class SpectralMeasure:
    """Probability measure on (0, 1]: finitely many atoms plus polynomial pieces."""

    atoms: tuple = ()
    pieces: tuple = ()

    def __post_init__(self):
        atoms = tuple((float(a), float(m)) for a, m in self.atoms)
        pieces = tuple(p if isinstance(p, DensityPiece) else DensityPiece(*p) for p in self.pieces)
        for a, m in atoms:
            if not (0.0 < a <= 1.0):
                raise DomainError(f"atom location {a!r} outside (0, 1]")
            if m < 0:
                raise DomainError("atom masses must be nonnegative")
        for p in pieces:
            grid = np.linspace(p.lo, p.hi, 257)[1:]
            if np.any(np.polynomial.polynomial.polyval(grid, p.coeffs) < -1e-12):
                raise DomainError("spectral density must be nonnegative")
        total = sum(m for _, m in atoms) + sum(p.int_g(0.0, 1.0) for p in pieces)
        if abs(total - 1.0) > 1e-10:
            raise DomainError(f"spectral measure has total mass {total!r}, not 1")
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "pieces", pieces)

    @classmethod
    def point(cls, alpha: float) -> "SpectralMeasure":
        return cls(atoms=((alpha, 1.0),))

    @classmethod
    def mixture(cls, items: Sequence[tuple[float, float]]) -> "SpectralMeasure":
        """Atomic measure from ``(location, mass)`` pairs; zero masses dropped."""
        return cls(atoms=tuple((a, m) for a, m in items if m > 0))

    @classmethod
    def expected_maximum(cls, m: int) -> "SpectralMeasure":
        """``m(m-1) t (1-t)^{m-2} dt``; ``m = 1`` gives the point mass at 1."""
        if m < 1:
            raise DomainError("m must be at least 1")
        if m == 1:
            return cls.point(1.0)
        # expand t (1 - t)^{m-2} into ascending powers
        base = np.polynomial.polynomial.polypow([1.0, -1.0], m - 2)
        coeffs = m * (m - 1) * np.concatenate([[0.0], base])
        return cls(pieces=(DensityPiece(0.0, 1.0, tuple(coeffs)),))

    @classmethod
    def uniform(cls) -> "SpectralMeasure":
        return cls(pieces=(DensityPiece(0.0, 1.0, (1.0,)),))

    def to_json(self) -> dict:
        return {
            "type": "spectral",
            "atoms": [[a, m] for a, m in self.atoms],
            "density": [[p.lo, p.hi, list(p.coeffs)] for p in self.pieces],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SpectralMeasure":
        return cls(atoms=tuple(tuple(a) for a in obj.get("atoms", [])),
                   pieces=tuple(DensityPiece(p[0], p[1], tuple(p[2])) for p in obj.get("density", [])))


@dataclass(frozen=True)
class SpectralFunction:
    """``phi(t) = int_{(t,1]} s^{-1} nu(ds)`` and its integral ``Phi``."""

    measure: SpectralMeasure

    def phi(self, t):
        t = np.asarray(t, dtype=float)
        out = np.zeros_like(t)
        for a, m in self.measure.atoms:
            out = out + np.where(t < a, m / a, 0.0)
        for p in self.measure.pieces:
            out = out + p.int_g_over_s_vec(t, 1.0)
        return float(out) if out.ndim == 0 else out

    def Phi(self, t):
        """``int_0^t phi = int min(s, t)/s nu(ds)``."""
        t = np.asarray(t, dtype=float)
        out = np.zeros_like(t)
        for a, m in self.measure.atoms:
            out = out + m * np.minimum(t, a) / a
        for p in self.measure.pieces:
            with np.errstate(invalid="ignore"):
                tail = np.where(t > 0, t * p.int_g_over_s_vec(t, 1.0), 0.0)
            out = out + p.int_g_vec(0.0, t) + tail
        return float(out) if out.ndim == 0 else out


def spectral_density(nu: SpectralMeasure) -> SpectralFunction:
    return SpectralFunction(nu)


# ---------------------------------------------------------------------------
# expectation specs


class ExpectationSpec:
    """Marker base class for expectation descriptions."""

    def to_json(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class Mean(ExpectationSpec):
    def to_json(self):
        return {"type": "mean"}


@dataclass(frozen=True)
class AvgQuantile(ExpectationSpec):
    alpha: float

    def __post_init__(self):
        if not (0.0 < self.alpha <= 1.0):
            raise DomainError(f"alpha must lie in (0, 1], got {self.alpha!r}")

    def to_json(self):
        return {"type": "avg_quantile", "alpha": self.alpha}


@dataclass(frozen=True)
class Spectral(ExpectationSpec):
    measure: SpectralMeasure

    def to_json(self):
        return self.measure.to_json()


@dataclass(frozen=True)
class OneSidedMoment(ExpectationSpec):
    p: float = 1.0
    a: float = 1.0

    def __post_init__(self):
        if not self.p >= 1.0:
            raise DomainError("p must be at least 1")
        if not (0.0 <= self.a <= 1.0):
            raise DomainError("a must lie in [0, 1]")

    def to_json(self):
        return {"type": "one_sided", "p": self.p, "a": self.a}


@dataclass(frozen=True)
class Expectile(ExpectationSpec):
    tau: float

    def __post_init__(self):
        if not (0.5 <= self.tau < 1.0):
            raise DomainError("tau must lie in [1/2, 1)")

    def to_json(self):
        return {"type": "expectile", "tau": self.tau}


@dataclass(frozen=True)
class MaxExt(ExpectationSpec):
    base: ExpectationSpec
    m: int

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 1:
            raise DomainError("m must be a positive integer")
        object.__setattr__(self, "m", int(self.m))

    def to_json(self):
        return {"type": "max_ext", "base": self.base.to_json(), "m": self.m}


@dataclass(frozen=True)
class EssSup(ExpectationSpec):
    def to_json(self):
        return {"type": "ess_sup"}


def spec_from_json(obj: dict) -> ExpectationSpec:
    try:
        kind = obj["type"]
        if kind == "mean":
            return Mean()
        if kind == "avg_quantile":
            return AvgQuantile(float(obj["alpha"]))
        if kind == "spectral":
            return Spectral(SpectralMeasure.from_json(obj))
        if kind == "one_sided":
            return OneSidedMoment(float(obj.get("p", 1.0)), float(obj.get("a", 1.0)))
        if kind == "expectile":
            return Expectile(float(obj["tau"]))
        if kind == "max_ext":
            return MaxExt(spec_from_json(obj["base"]), int(obj["m"]))
        if kind == "ess_sup":
            return EssSup()
    except KeyError as exc:
        raise DomainError(f"spec JSON is missing field {exc}") from exc
    raise DomainError(f"unknown spec type {obj.get('type')!r}")


# ---------------------------------------------------------------------------
# scalar evaluations


def avg_quantile(law: ScalarLaw, alpha: float) -> float:
    """``(1/alpha) int_{1-alpha}^1 q_t dt``."""
    if not (0.0 < alpha <= 1.0):
        raise DomainError(f"alpha must lie in (0, 1], got {alpha!r}")
    if alpha == 1.0:
        return law.mean
    return law.quantile_integral(1.0 - alpha, 1.0) / alpha


def avg_quantiles(law: ScalarLaw, alphas) -> np.ndarray:
    """Vectorised :func:`avg_quantile` over an array of levels in (0, 1]."""
    a = np.asarray(alphas, dtype=float)
    if np.any(~(a > 0)) or np.any(a > 1):
        raise DomainError("alpha must lie in (0, 1]")
    return law.tail_integrals(a) / a


def _tail_integral(law: ScalarLaw, alpha: float) -> float:
    # Q(alpha) = int_{1-alpha}^1 q_t dt, with Q(0) = 0
    if alpha <= 0.0:
        return 0.0
    return law.quantile_integral(1.0 - min(alpha, 1.0), 1.0)


def spectral_value(law: ScalarLaw, nu: SpectralMeasure) -> float:
    """``int avg_quantile(law, a) nu(da)``.

    Atoms are summed directly.  For empirical laws ``Q(a) = a e_a`` is
    piecewise linear in ``a`` so every polynomial piece integrates in closed
    form; otherwise the pieces are integrated by adaptive quadrature.
    """
    total = 0.0
    for a, m in nu.atoms:
        if m > 0:
            total += m * avg_quantile(law, a)
    if not nu.pieces:
        return float(total)
    if isinstance(law, EmpiricalLaw):
        # cells in alpha: top atom first
        v = law.values[::-1]
        w = law.weights[::-1]
        edges = np.concatenate([[0.0], np.cumsum(w)])
        edges[-1] = 1.0
        Qe = np.concatenate([[0.0], np.cumsum(w * v)])
        for p in nu.pieces:
            for k in range(v.size):
                a, b = edges[k], edges[k + 1]
                if b <= p.lo or a >= p.hi:
                    continue
                B = v[k]
                A = Qe[k] - B * a  # Q(x) = A + B x on this cell
                part = B * p.int_g(a, b)
                if A != 0.0:
                    part += A * p.int_g_over_s(a, b)
                total += part
        return float(total)
    kinks = []
    if hasattr(law, "knots"):
        kinks = [1.0 - float(c) for c in np.asarray(law.cdf(np.asarray(law.knots)))]
    for p in nu.pieces:
        cuts = sorted({p.lo, p.hi, *[k for k in kinks if p.lo < k < p.hi]})
        for a, b in zip(cuts[:-1], cuts[1:]):
            total += _adaptive_gl(lambda x, p=p: p(x) * law.tail_integrals(x) / x, a, b)
    return float(total)


_GL_X, _GL_W = np.polynomial.legendre.leggauss(32)


def _gl(f, a, b):
    x = (a + b) / 2 + (b - a) / 2 * _GL_X
    return float(np.dot(_GL_W, f(x))) * (b - a) / 2


def _adaptive_gl(f, a, b, tol=1e-13, depth=0):
    """Vectorised adaptive Gauss-Legendre on [a, b] for smooth integrands."""
    whole = _gl(f, a, b)
    m = (a + b) / 2
    left, right = _gl(f, a, m), _gl(f, m, b)
    if abs(left + right - whole) <= tol * max(1.0, abs(whole)) or depth >= 20:
        return left + right
    return _adaptive_gl(f, a, m, tol / 2, depth + 1) + _adaptive_gl(f, m, b, tol / 2, depth + 1)


def distortion_value(law: ScalarLaw, Phi: Callable) -> float:
    """``int_0^1 q_{1-t} dPhi(t)`` for a concave distortion ``Phi``.

    Exact for empirical laws; continuous laws use ``int q_{1-t} phi(t) dt``
    through Stieltjes quadrature on ``Phi``.
    """
    if isinstance(law, EmpiricalLaw):
        c = np.concatenate([[0.0], law.cumulative])
        hi = np.asarray(Phi(1.0 - c[:-1]), dtype=float)
        lo = np.asarray(Phi(1.0 - c[1:]), dtype=float)
        return float(np.dot(law.values, hi - lo))
    # integrate by parts: int q_{1-t} dPhi = sum over a fine t-grid of Phi increments
    f = lambda t: float(law.quantile(min(max(1.0 - t, 1e-16), 1 - 1e-16)))
    x, wt = np.polynomial.legendre.leggauss(64)
    edges = np.linspace(0.0, 1.0, 65)
    total = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        # midpoint rule against dPhi on sub-cells
        tt = (a + b) / 2 + (b - a) / 2 * x
        cut = np.concatenate([[a], (tt[:-1] + tt[1:]) / 2, [b]])
        dPhi = np.diff(np.asarray(Phi(cut), dtype=float))
        total += float(sum(f(t) * d for t, d in zip(tt, dPhi)))
    return total


def one_sided_moment(law: ScalarLaw, p: float = 1.0, a: float = 1.0) -> float:
    """``E b + a (E (b - E b)_+^p)^{1/p}``."""
    if not p >= 1.0:
        raise DomainError("p must be at least 1")
    if not (0.0 <= a <= 1.0):
        raise DomainError("a must lie in [0, 1]")
    m = law.mean
    if a == 0.0:
        return m
    upm = law.upper_partial_moment(m, p)
    return m + a * max(upm, 0.0) ** (1.0 / p)


def _expectile_empirical(law: EmpiricalLaw, tau: float) -> float:
    v, p = law.values, law.weights
    if v.size == 1:
        return float(v[0])
    M = float(np.dot(v, p))
    P = np.cumsum(p)  # mass at or below v_k
    S = np.cumsum(p * v)
    # f(x) on [v_k, v_{k+1}] is linear: num_k - x den_k
    num = tau * (M - S) + (1 - tau) * S
    den = tau * (1 - P) + (1 - tau) * P
    f_at = num - v * den
    # f is decreasing; root lies in the first cell whose right end has f <= 0
    k = int(np.searchsorted(-f_at, 0.0, side="left"))
    if k == 0:
        return float(v[0])
    k -= 1
    x = num[k] / den[k]
    return float(min(max(x, v[k]), v[k + 1]))


def expectile(law: ScalarLaw, tau: float) -> float:
    """Root of ``tau E(b - x)_+ = (1 - tau) E(x - b)_+``."""
    if not (0.5 <= tau < 1.0):
        raise DomainError("tau must lie in [1/2, 1)")
    M = law.mean
    if tau == 0.5:
        return M
    if isinstance(law, EmpiricalLaw):
        return _expectile_empirical(law, tau)
    f = lambda x: (2 * tau - 1) * law.upper_partial_moment(x, 1.0) - (1 - tau) * (x - M)
    lo, hi = law.lower - 1.0, law.upper + 1.0
    k = 0
    while f(lo) < 0 or f(hi) > 0:
        lo, hi = lo - 2.0**k, hi + 2.0**k
        k += 1
        if k > 60:
            raise RuntimeError("expectile bracket expansion failed")
    return float(optimize.brentq(f, lo, hi, xtol=1e-13, rtol=1e-15, maxiter=500))


def ess_sup(law: ScalarLaw) -> float:
    return float(law.upper)


def evaluate(spec: ExpectationSpec, law: ScalarLaw) -> float:
    """Value of ``spec`` at ``law``."""
    if isinstance(spec, Mean):
        return law.mean
    if isinstance(spec, AvgQuantile):
        return avg_quantile(law, spec.alpha)
    if isinstance(spec, Spectral):
        return spectral_value(law, spec.measure)
    if isinstance(spec, OneSidedMoment):
        return one_sided_moment(law, spec.p, spec.a)
    if isinstance(spec, Expectile):
        return expectile(law, spec.tau)
    if isinstance(spec, MaxExt):
        return evaluate(spec.base, max_law(law, spec.m))
    if isinstance(spec, EssSup):
        return ess_sup(law)
    raise DomainError(f"unknown expectation spec {spec!r}")


# ---------------------------------------------------------------------------
# distortions of spectral-type specs


def is_spectral_type(spec: ExpectationSpec) -> bool:
    if isinstance(spec, (Mean, AvgQuantile, Spectral, EssSup)):
        return True
    if isinstance(spec, MaxExt):
        return is_spectral_type(spec.base)
    return False


def distortion(spec: ExpectationSpec) -> Callable:
    """Vectorised ``Phi`` on [0, 1] with ``Phi(0) = 0``, ``Phi(1) = 1``."""
    if isinstance(spec, Mean):
        return lambda t: np.asarray(t, dtype=float)
    if isinstance(spec, AvgQuantile):
        a = spec.alpha
        return lambda t: np.minimum(np.asarray(t, dtype=float), a) / a
    if isinstance(spec, Spectral):
        return SpectralFunction(spec.measure).Phi
    if isinstance(spec, EssSup):
        return lambda t: np.where(np.asarray(t, dtype=float) > 0, 1.0, 0.0)
    if isinstance(spec, MaxExt):
        base = distortion(spec.base)
        m = spec.m
        return lambda t: base(1.0 - (1.0 - np.asarray(t, dtype=float)) ** m)
    raise DomainError(f"{type(spec).__name__} is not of spectral type")


# ---------------------------------------------------------------------------
# Kusuoka suprema and families


def kusuoka_sup(law: ScalarLaw, measures: Sequence[SpectralMeasure]) -> float:
    if len(measures) == 0:
        raise DomainError("Kusuoka supremum over an empty family")
    return max(spectral_value(law, nu) for nu in measures)


def one_sided_family(a: float, ts) -> list[SpectralMeasure]:
    """Measures ``(1 - a t) delta_1 + a t delta_t`` for ``t`` in ``ts``."""
    out = []
    for t in ts:
        if t <= 0:
            out.append(SpectralMeasure.point(1.0))
        else:
            out.append(SpectralMeasure.mixture([(1.0, 1 - a * t), (float(t), a * t)]))
    return out


def expectile_family(tau: float, ss) -> list[SpectralMeasure]:
    """Measures ``(1 - s) delta_1 + s delta_{alpha(s)}`` for ``s`` in ``ss``.

    ``alpha(s) = (1 - tau) s / ((2 tau - 1)(1 - s))``, ``s`` in ``[0, 2 - 1/tau]``.
    """
    smax = 2.0 - 1.0 / tau
    out = []
    for s in ss:
        s = min(max(float(s), 0.0), smax)
        if s == 0.0 or tau == 0.5:
            out.append(SpectralMeasure.point(1.0))
            continue
        a = min((1 - tau) * s / ((2 * tau - 1) * (1 - s)), 1.0)
        out.append(SpectralMeasure.mixture([(1.0, 1 - s), (a, s)]))
    return out


def one_sided_sup_breakpoints(law: EmpiricalLaw, a: float) -> float:
    """``E b + a sup_t t e_t(b - E b)`` with the sup over order-statistic levels.

    ``t -> t e_t`` is piecewise linear with breakpoints at the cumulative
    tail masses, so the sup over those finitely many levels is exact.
    """
    m = law.mean
    levels = np.concatenate([np.cumsum(law.weights[::-1])])
    levels[-1] = 1.0
    centered = law.shifted(-m)
    best = max(centered.quantile_integral(1.0 - t, 1.0) if t < 1 else 0.0 for t in levels)
    return m + a * max(best, 0.0)


# ---------------------------------------------------------------------------
# Orlicz norms


def orlicz_norm(law: ScalarLaw, psi: Callable, tol: float = 1e-10) -> float:
    """``inf{lam > 0 : E psi(b / lam) <= 1}`` by monotone bisection."""
    def G(lam):
        return law.expect(lambda x: psi(np.asarray(x) / lam))

    hi = 1.0
    k = 0
    while True:
        g = G(hi)
        if np.isfinite(g) and g <= 1.0:
            break
        hi *= 2.0
        k += 1
        if k > 200:
            raise DomainError("Orlicz expectation is not finite for any bracketed lambda")
    lo = hi
    while lo > 1e-300 and G(lo) <= 1.0:
        hi = lo
        lo /= 2.0
        if lo < 1e-300:
            return 0.0
    while hi - lo > tol * max(1.0, hi):
        mid = 0.5 * (lo + hi)
        if G(mid) <= 1.0:
            hi = mid
        else:
            lo = mid
    return hi


# ---------------------------------------------------------------------------
# test utilities


def geometric_max_law(law: EmpiricalLaw, lam: float, tail: float = 1e-9) -> EmpiricalLaw:
    """Law of ``max(b_1, ..., b_N)`` with geometric ``N`` of parameter ``lam``.

    The series over ``N`` is truncated once the remaining mass is below
    ``tail`` and the retained weights are renormalised.
    """
    if not (0.0 < lam <= 1.0):
        raise DomainError("lambda must lie in (0, 1]")
    if lam == 1.0:
        return law
    cum = law.cumulative
    mix = np.zeros_like(cum)
    mass = 0.0
    k = 1
    while mass < 1.0 - tail:
        w = lam * (1 - lam) ** (k - 1)
        mix += w * cum**k
        mass += w
        k += 1
    mix /= mass
    mix[-1] = 1.0
    w = np.diff(np.concatenate([[0.0], mix]))
    keep = w > 0
    return EmpiricalLaw(law.values[keep], w[keep] / w[keep].sum())


def max_ext_avg_quantile_direct(law: ScalarLaw, alpha: float, m: int) -> float:
    """Closed-form mixture for the maximum extension of the average quantile.

    Evaluates, by quadrature in ``t``,
    ``(m(m-1)/alpha) int_0^{s*} t (1-t)^{m-2} e_t dt
    + (m/alpha) (1-alpha)^{(m-1)/m} s* e_{s*}``
    with ``s* = 1 - (1 - alpha)^{1/m}``.
    """
    if m == 1:
        return avg_quantile(law, alpha)
    s_star = 1.0 - (1.0 - alpha) ** (1.0 / m)
    Q = lambda t: _tail_integral(law, t)  # t e_t
    f = lambda t: (1 - t) ** (m - 2) * Q(t)
    pts = None
    if isinstance(law, EmpiricalLaw):
        br = np.cumsum(law.weights[::-1])
        pts = [float(b) for b in br if 0 < b < s_star]
    integral, _ = integrate.quad(f, 0.0, s_star, points=pts, epsabs=1e-14, epsrel=1e-13, limit=500)
    return m * (m - 1) / alpha * integral + m / alpha * (1 - alpha) ** ((m - 1) / m) * Q(s_star)


__all__ = [
    "DensityPiece", "SpectralMeasure", "SpectralFunction", "spectral_density",
    "ExpectationSpec", "Mean", "AvgQuantile", "Spectral", "OneSidedMoment", "Expectile", "MaxExt",
    "EssSup", "spec_from_json", "avg_quantile", "avg_quantiles", "spectral_value", "distortion_value",
    "one_sided_moment", "expectile", "ess_sup", "evaluate", "is_spectral_type", "distortion",
    "kusuoka_sup", "one_sided_family", "expectile_family", "one_sided_sup_breakpoints",
    "orlicz_norm", "geometric_max_law", "max_ext_avg_quantile_direct",
]
