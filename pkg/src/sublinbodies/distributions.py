"""One-dimensional laws with exact quantile arithmetic.

Every law exposes the same small surface: ``cdf``, ``quantile``,
``quantile_integral`` (the exact integral of the quantile function over a
probability interval), ``upper_partial_moment`` and ``expect``.  Discrete laws
are handled by breakpoint arithmetic; continuous laws either carry closed
forms (piecewise-linear densities, ball marginals) or fall back to adaptive
quadrature of their CDF, never of the quantile function itself.

Quantiles use the left-continuous inverse ``q_t = inf{s : F(s) >= t}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy import integrate, optimize, special

_QUAD_OPTS = dict(epsabs=1e-14, epsrel=1e-12, limit=400)


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


def _check_open_prob(t):
    arr = np.asarray(t, dtype=float)
    if np.any(~(arr > 0.0)) or np.any(~(arr < 1.0)):
        raise DomainError(f"probability level must lie in (0, 1), got {t!r}")
    return arr


def _check_interval(a: float, b: float) -> None:
    if not (0.0 <= a < b <= 1.0):
        raise DomainError(f"need 0 <= a < b <= 1, got a={a!r}, b={b!r}")


class ScalarLaw:
    """Base class of one-dimensional laws.

    Subclasses implement ``_quantile`` on the closed interval [0, 1] (with
    ``q_0`` the lower and ``q_1`` the upper end of the support) together with
    ``cdf`` and ``_qint``.  The public ``quantile`` only accepts levels in
    the open interval.
    """

    lower: float
    upper: float

    # -- required hooks -------------------------------------------------
    def cdf(self, s):
        raise NotImplementedError

    def _quantile(self, t):
        raise NotImplementedError

    def _qint(self, a: float, b: float) -> float:
        raise NotImplementedError

    def upper_partial_moment(self, c: float, p: float = 1.0) -> float:
        """Return ``E (X - c)_+^p``."""
        raise NotImplementedError

    def expect(self, f: Callable[[np.ndarray], np.ndarray]) -> float:
        """Return ``E f(X)`` for a vectorised function ``f``."""
        raise NotImplementedError

    # -- public API -----------------------------------------------------
    def quantile(self, t):
        t = _check_open_prob(t)
        out = self._quantile(t)
        return float(out) if np.ndim(out) == 0 else out

    def quantile_integral(self, a: float, b: float) -> float:
        """Exact value of the integral of ``q_t`` over ``t`` in ``[a, b]``."""
        _check_interval(a, b)
        return float(self._qint(float(a), float(b)))

    def tail_integrals(self, alphas) -> np.ndarray:
        """``int_{1-a}^1 q_t dt`` for every ``a`` in ``alphas`` (``a`` in [0, 1])."""
        a = np.asarray(alphas, dtype=float)
        out = np.array([self._qint(1.0 - x, 1.0) if x > 0 else 0.0 for x in a.ravel()])
        return out.reshape(a.shape)

    @property
    def mean(self) -> float:
        return self.quantile_integral(0.0, 1.0)

    @property
    def is_discrete(self) -> bool:
        return False


# ---------------------------------------------------------------------------
# discrete laws


class EmpiricalLaw(ScalarLaw):
    """Finitely supported law with sorted, merged atoms.

    Parameters
    ----------
    values : array_like
        Atom locations (any order, duplicates allowed).
    weights : array_like, optional
        Positive masses summing to one; equal weights by default.
    merge_tol : float
        Atoms closer than ``merge_tol`` (absolute) are merged, keeping the
        smallest location.
    """

    def __init__(self, values, weights=None, merge_tol: float = 0.0):
        v = np.asarray(values, dtype=float).ravel()
        if v.size == 0:
            raise DomainError("empirical law needs at least one atom")
        if not np.all(np.isfinite(v)):
            raise DomainError("atoms must be finite")
        if weights is None:
            w = np.full(v.size, 1.0 / v.size)
        else:
            w = np.asarray(weights, dtype=float).ravel()
            if w.shape != v.shape:
                raise DomainError("values and weights differ in length")
            if np.any(w < 0) or not np.all(np.isfinite(w)):
                raise DomainError("weights must be finite and nonnegative")
            total = w.sum()
            if abs(total - 1.0) > 1e-9:
                raise DomainError(f"weights sum to {total!r}, not 1")
            keep = w > 0
            v, w = v[keep], w[keep] / total
        order = np.argsort(v, kind="stable")
        v, w = v[order], w[order]
        if v.size > 1:
            gaps = np.diff(v)
            new_atom = np.concatenate([[True], gaps > merge_tol])
            idx = np.cumsum(new_atom) - 1
            w = np.bincount(idx, weights=w)
            v = v[new_atom]
        self.values = v
        self.weights = w
        cum = np.cumsum(w)
        cum[-1] = 1.0
        self._cum = cum
        self.lower = float(v[0])
        self.upper = float(v[-1])

    @property
    def is_discrete(self) -> bool:
        return True

    @property
    def cumulative(self) -> np.ndarray:
        return self._cum

    def __repr__(self) -> str:
        return f"EmpiricalLaw(n_atoms={self.values.size}, range=[{self.lower:g}, {self.upper:g}])"

    def cdf(self, s):
        idx = np.searchsorted(self.values, s, side="right")
        cum0 = np.concatenate([[0.0], self._cum])
        out = cum0[idx]
        return float(out) if np.ndim(out) == 0 else out

    def _quantile(self, t):
        # cumulative sums carry rounding; treat levels within 1e-12 as reached
        idx = np.searchsorted(self._cum, np.asarray(t) - 1e-12, side="left")
        idx = np.clip(idx, 0, self.values.size - 1)
        return self.values[idx]

    def _qint(self, a, b):
        lo = np.concatenate([[0.0], self._cum[:-1]])
        overlap = np.clip(np.minimum(self._cum, b) - np.maximum(lo, a), 0.0, None)
        return float(np.dot(self.values, overlap))

    def tail_integrals(self, alphas):
        a = np.asarray(alphas, dtype=float)
        lo = np.concatenate([[0.0], self._cum[:-1]])
        start = 1.0 - a.ravel()[:, None]
        overlap = np.clip(self._cum[None, :] - np.maximum(lo[None, :], start), 0.0, None)
        return (overlap @ self.values).reshape(a.shape)

    def upper_partial_moment(self, c, p=1.0):
        excess = np.clip(self.values - c, 0.0, None)
        return float(np.dot(self.weights, excess**p))

    def expect(self, f):
        return float(np.dot(self.weights, f(self.values)))

    def shifted(self, a: float) -> "EmpiricalLaw":
        return EmpiricalLaw(self.values + a, self.weights)

    def scaled(self, c: float) -> "EmpiricalLaw":
        return EmpiricalLaw(self.values * c, self.weights)


# ---------------------------------------------------------------------------
# continuous laws


class ContinuousLaw(ScalarLaw):
    """Atomless law with bounded support and a known CDF.

    Generic implementations rely on integration by parts,
    ``int_a^b q_t dt = b q_b - a q_a - int_{q_a}^{q_b} F(s) ds``, so only the
    CDF is ever integrated numerically.
    """

    knots: np.ndarray  # breakpoints of smoothness, including both ends

    def pdf(self, s):
        raise NotImplementedError

    def _inner_points(self, lo, hi):
        pts = [k for k in self.knots if lo < k < hi]
        return pts or None

    def _cdf_integral(self, lo: float, hi: float) -> float:
        if hi <= lo:
            return 0.0
        val, _ = integrate.quad(self.cdf, lo, hi, points=self._inner_points(lo, hi), **_QUAD_OPTS)
        return val

    def _qint(self, a, b):
        qa = float(self._quantile(a))
        qb = float(self._quantile(b))
        return b * qb - a * qa - self._cdf_integral(qa, qb)

    def upper_partial_moment(self, c, p=1.0):
        lo = max(c, self.lower)
        if lo >= self.upper:
            return 0.0
        base = 0.0
        if c < self.lower:
            # the region [c, lower] carries survival probability one
            base = (self.lower - c) ** p if p == 1.0 else 0.0
            if p != 1.0:
                f = lambda s: p * (s - c) ** (p - 1.0)
                base, _ = integrate.quad(f, c, self.lower, **_QUAD_OPTS)
        g = lambda s: p * (s - c) ** (p - 1.0) * (1.0 - self.cdf(s))
        val, _ = integrate.quad(g, lo, self.upper, points=self._inner_points(lo, self.upper), **_QUAD_OPTS)
        return base + val

    def expect(self, f):
        g = lambda s: f(np.asarray(s)) * self.pdf(s)
        val, _ = integrate.quad(g, self.lower, self.upper, points=self._inner_points(self.lower, self.upper),
                                **_QUAD_OPTS)
        return float(val)

    def _invert_cdf(self, t: float) -> float:
        if t <= 0.0:
            return self.lower
        if t >= 1.0:
            return self.upper
        return optimize.brentq(lambda s: self.cdf(s) - t, self.lower, self.upper, xtol=1e-15, rtol=1e-15,
                               maxiter=400)


class PiecewiseLinearLaw(ContinuousLaw):
    """Law whose density is linear between consecutive knots.

    The density is given by its values at the knots and vanishes outside
    ``[knots[0], knots[-1]]``.  CDF, quantile, first-moment and partial
    moments are all evaluated in closed form.
    """

    def __init__(self, knots, density, normalize: bool = False):
        x = np.asarray(knots, dtype=float)
        f = np.asarray(density, dtype=float)
        if x.ndim != 1 or x.shape != f.shape or x.size < 2:
            raise DomainError("need matching 1-d knot and density arrays of length >= 2")
        if np.any(np.diff(x) <= 0):
            raise DomainError("knots must be strictly increasing")
        if np.any(f < -1e-14) or not np.all(np.isfinite(f)):
            raise DomainError("density must be finite and nonnegative")
        f = np.clip(f, 0.0, None)
        h = np.diff(x)
        mass = h * (f[:-1] + f[1:]) / 2
        total = mass.sum()
        if normalize:
            f = f / total
            mass = mass / total
        elif abs(total - 1.0) > 1e-10:
            raise DomainError(f"density integrates to {total!r}, not 1")
        self.knots = x
        self.density = f
        self._h = h
        self._slope = (f[1:] - f[:-1]) / h
        cum = np.concatenate([[0.0], np.cumsum(mass)])
        cum /= cum[-1]
        self._cum = cum
        # first moment accumulated up to each knot
        mom = self._piece_moment(np.arange(h.size), h)
        self._mom = np.concatenate([[0.0], np.cumsum(mom)])
        self.lower = float(x[0])
        self.upper = float(x[-1])

    def __repr__(self) -> str:
        return f"PiecewiseLinearLaw(n_knots={self.knots.size}, range=[{self.lower:g}, {self.upper:g}])"

    def _piece_moment(self, j, y):
        x0, f0, g = self.knots[j], self.density[j], self._slope[j]
        return x0 * f0 * y + (x0 * g + f0) * y**2 / 2 + g * y**3 / 3

    def _locate(self, s):
        j = np.searchsorted(self.knots, s, side="right") - 1
        return np.clip(j, 0, self._h.size - 1)

    def pdf(self, s):
        s = np.asarray(s, dtype=float)
        j = self._locate(s)
        y = s - self.knots[j]
        out = self.density[j] + self._slope[j] * y
        out = np.where((s < self.lower) | (s > self.upper), 0.0, out)
        return float(out) if out.ndim == 0 else out

    def cdf(self, s):
        s = np.asarray(s, dtype=float)
        j = self._locate(s)
        y = np.clip(s - self.knots[j], 0.0, self._h[j])
        out = self._cum[j] + self.density[j] * y + self._slope[j] * y**2 / 2
        out = np.where(s < self.lower, 0.0, np.where(s >= self.upper, 1.0, out))
        out = np.clip(out, 0.0, 1.0)
        return float(out) if out.ndim == 0 else out

    def _quantile(self, t):
        t = np.asarray(t, dtype=float)
        j = np.searchsorted(self._cum, t, side="left") - 1
        j = np.clip(j, 0, self._h.size - 1)
        r = np.clip(t - self._cum[j], 0.0, None)
        f0, g = self.density[j], self._slope[j]
        disc = np.clip(f0**2 + 2 * g * r, 0.0, None)
        denom = f0 + np.sqrt(disc)
        with np.errstate(divide="ignore", invalid="ignore"):
            y = np.where(denom > 0, 2 * r / np.where(denom > 0, denom, 1.0), 0.0)
        y = np.clip(y, 0.0, self._h[j])
        out = self.knots[j] + y
        out = np.where(t <= 0.0, self.lower, np.where(t >= 1.0, self.upper, out))
        return float(out) if out.ndim == 0 else out

    def _moment_to(self, s):
        s = np.asarray(s, dtype=float)
        j = self._locate(s)
        y = np.clip(s - self.knots[j], 0.0, self._h[j])
        out = self._mom[j] + self._piece_moment(j, y)
        return float(out) if out.ndim == 0 else out

    def tail_integrals(self, alphas):
        a = np.asarray(alphas, dtype=float)
        q = self._quantile(np.clip(1.0 - a, 0.0, 1.0))
        return np.where(a > 0, self._mom[-1] - self._moment_to(q), 0.0)

    def _qint(self, a, b):
        return self._moment_to(float(self._quantile(b))) - self._moment_to(float(self._quantile(a)))

    def upper_partial_moment(self, c, p=1.0):
        total = 0.0
        for j in range(self._h.size):
            x0, x1 = self.knots[j], self.knots[j + 1]
            if x1 <= c:
                continue
            lo = max(x0, c)
            # density on the piece rewritten around c: A + B (s - c)
            B = self._slope[j]
            A = self.density[j] + B * (c - x0)
            y0, y1 = lo - c, x1 - c
            total += A * (y1 ** (p + 1) - y0 ** (p + 1)) / (p + 1) + B * (y1 ** (p + 2) - y0 ** (p + 2)) / (p + 2)
        return float(max(total, 0.0))


def uniform_law(lo: float, hi: float) -> PiecewiseLinearLaw:
    """Uniform law on ``[lo, hi]``."""
    if not hi > lo:
        raise DomainError("uniform law needs hi > lo")
    d = 1.0 / (hi - lo)
    return PiecewiseLinearLaw([lo, hi], [d, d])


class BallMarginalLaw(ContinuousLaw):
    """Law of one coordinate of a uniform point in the unit ball of R^d.

    The density is proportional to ``(1 - s^2)^((d-1)/2)`` on [-1, 1]; for
    ``d = 2`` this is the semicircle law ``2 sqrt(1 - s^2) / pi``.
    """

    def __init__(self, dim: int):
        if dim < 1:
            raise DomainError("dimension must be positive")
        self.dim = int(dim)
        self._k = (dim - 1) / 2.0
        self._a = self._k + 1.0  # beta-distribution shape of (1 + s) / 2
        self._norm = 1.0 / special.beta(0.5, self._k + 1.0)
        self.lower, self.upper = -1.0, 1.0
        self.knots = np.array([-1.0, 1.0])

    def __repr__(self) -> str:
        return f"BallMarginalLaw(dim={self.dim})"

    def pdf(self, s):
        s = np.asarray(s, dtype=float)
        out = self._norm * np.clip(1 - s**2, 0.0, None) ** self._k
        out = np.where(np.abs(s) > 1, 0.0, out)
        return float(out) if out.ndim == 0 else out

    def cdf(self, s):
        x = np.clip((np.asarray(s, dtype=float) + 1) / 2, 0.0, 1.0)
        out = special.betainc(self._a, self._a, x)
        return float(out) if np.ndim(out) == 0 else out

    def _quantile(self, t):
        t = np.asarray(t, dtype=float)
        q = 2 * special.betaincinv(self._a, self._a, t) - 1
        # one Newton polish; betaincinv is accurate to a few ulps but not always
        inner = (t > 0) & (t < 1)
        if np.any(inner):
            dens = np.asarray(self.pdf(q))
            corr = np.where(inner & (dens > 1e-8), (np.asarray(self.cdf(q)) - t) / np.where(dens > 0, dens, 1), 0.0)
            q = np.clip(q - corr, -1.0, 1.0)
        return float(q) if np.ndim(q) == 0 else q

    def _first_moment_tail(self, s: float) -> float:
        # int_s^1 x f(x) dx in closed form
        return self._norm / (2 * (self._k + 1)) * max(1 - s * s, 0.0) ** (self._k + 1)

    def _qint(self, a, b):
        qa, qb = float(self._quantile(a)), float(self._quantile(b))
        return self._first_moment_tail(qa) - self._first_moment_tail(qb)

    def tail_integrals(self, alphas):
        a = np.asarray(alphas, dtype=float)
        q = np.asarray(self._quantile(np.clip(1.0 - a, 0.0, 1.0)), dtype=float)
        out = self._norm / (2 * (self._k + 1)) * np.clip(1 - q * q, 0.0, None) ** (self._k + 1)
        return np.where(a > 0, out, 0.0)

    def upper_partial_moment(self, c, p=1.0):
        if p == 1.0:
            if c >= 1.0:
                return 0.0
            if c <= -1.0:
                return -c  # mean is zero
            return self._first_moment_tail(c) - c * (1.0 - self.cdf(c))
        return super().upper_partial_moment(c, p)


class SumOfUniformsLaw(ContinuousLaw):
    """Law of ``sum_i U_i`` with independent ``U_i`` uniform on ``[-b_i, b_i]``.

    This is the projection of a uniform point in a box; the CDF follows from
    inclusion-exclusion over the box corners and is exact in any dimension.
    """

    def __init__(self, half_widths):
        b = np.asarray(half_widths, dtype=float).ravel()
        b = b[b > 0]
        if b.size == 0:
            raise DomainError("need at least one positive half-width")
        self.half_widths = b
        n = b.size
        signs = np.array(np.meshgrid(*([[1.0, -1.0]] * n), indexing="ij")).reshape(n, -1).T
        self._shifts = signs @ b  # corner offsets: sum of +/- b_i
        self._signs = np.prod(signs, axis=1)  # (-1)^{|S|}
        self._n = n
        self._scale = 1.0 / np.prod(2 * b)
        self.lower, self.upper = -float(b.sum()), float(b.sum())
        self.knots = np.unique(np.round(self._shifts, 14))

    def __repr__(self) -> str:
        return f"SumOfUniformsLaw(half_widths={self.half_widths.tolist()})"

    def _power_sum(self, s, power):
        s = np.asarray(s, dtype=float)
        z = np.clip(s[..., None] + self._shifts, 0.0, None) ** power
        return self._scale / math.factorial(power) * (z @ self._signs)

    def pdf(self, s):
        out = self._power_sum(s, self._n - 1) if self._n > 1 else np.where(
            np.abs(np.asarray(s, dtype=float)) <= self.upper, self._scale, 0.0)
        out = np.clip(out, 0.0, None)
        return float(out) if np.ndim(out) == 0 else out

    def cdf(self, s):
        out = np.clip(self._power_sum(s, self._n), 0.0, 1.0)
        out = np.where(np.asarray(s) >= self.upper, 1.0, out)
        return float(out) if np.ndim(out) == 0 else out

    def _cdf_integral(self, lo, hi):
        return float(self._power_sum(hi, self._n + 1) - self._power_sum(lo, self._n + 1))

    def _quantile(self, t):
        t = np.asarray(t, dtype=float)
        out = np.vectorize(self._invert_cdf, otypes=[float])(t)
        return float(out) if out.ndim == 0 else out


class AffineLaw(ScalarLaw):
    """Law of ``shift + scale * X`` for a base law ``X`` and ``scale > 0``."""

    def __init__(self, base: ScalarLaw, scale: float, shift: float = 0.0):
        if not scale > 0:
            raise DomainError("affine scale must be positive")
        self.base, self.scale, self.shift = base, float(scale), float(shift)
        self.lower = shift + scale * base.lower
        self.upper = shift + scale * base.upper

    def __repr__(self) -> str:
        return f"AffineLaw({self.base!r}, scale={self.scale:g}, shift={self.shift:g})"

    @property
    def is_discrete(self) -> bool:
        return self.base.is_discrete

    @property
    def knots(self):
        return self.shift + self.scale * np.asarray(self.base.knots)

    def pdf(self, s):
        return self.base.pdf((np.asarray(s) - self.shift) / self.scale) / self.scale

    def cdf(self, s):
        return self.base.cdf((np.asarray(s) - self.shift) / self.scale)

    def _quantile(self, t):
        return self.shift + self.scale * self.base._quantile(t)

    def _qint(self, a, b):
        return self.shift * (b - a) + self.scale * self.base._qint(a, b)

    def tail_integrals(self, alphas):
        a = np.asarray(alphas, dtype=float)
        return self.shift * a + self.scale * self.base.tail_integrals(a)

    def upper_partial_moment(self, c, p=1.0):
        return self.scale**p * self.base.upper_partial_moment((c - self.shift) / self.scale, p)

    def expect(self, f):
        return self.base.expect(lambda x: f(self.shift + self.scale * x))


class MaxLaw(ContinuousLaw):
    """Law of the maximum of ``m`` independent copies of a continuous law."""

    def __init__(self, base: ScalarLaw, m: int):
        self.base, self.m = base, int(m)
        self.lower, self.upper = base.lower, base.upper
        self.knots = np.asarray(getattr(base, "knots", [base.lower, base.upper]))

    def __repr__(self) -> str:
        return f"MaxLaw({self.base!r}, m={self.m})"

    def pdf(self, s):
        return self.m * np.asarray(self.base.cdf(s)) ** (self.m - 1) * self.base.pdf(s)

    def cdf(self, s):
        out = np.asarray(self.base.cdf(s)) ** self.m
        return float(out) if out.ndim == 0 else out

    def _quantile(self, t):
        if np.ndim(t) == 0:
            return self.base._quantile(math.pow(float(t), 1.0 / self.m))
        return self.base._quantile(np.asarray(t, dtype=float) ** (1.0 / self.m))


def max_law(law: ScalarLaw, m: int) -> ScalarLaw:
    """Law of ``max(X_1, ..., X_m)`` for i.i.d. copies of ``law``.

    The quantile of the result at level ``t`` is the quantile of ``law`` at
    ``t ** (1/m)``.  Discrete laws stay discrete; nested maxima are flattened
    so that ``max_law(max_law(X, m), k)`` is ``max_law(X, m * k)``.
    """
    if int(m) != m or m < 1:
        raise DomainError(f"m must be a positive integer, got {m!r}")
    m = int(m)
    if m == 1:
        return law
    if isinstance(law, EmpiricalLaw):
        cum = law.cumulative ** m
        w = np.diff(np.concatenate([[0.0], cum]))
        return EmpiricalLaw(law.values, w / w.sum())
    if isinstance(law, MaxLaw):
        return MaxLaw(law.base, law.m * m)
    return MaxLaw(law, m)


# ---------------------------------------------------------------------------
# multivariate samples


@dataclass(frozen=True)
class WeightedSample:
    """Discrete probability measure on R^d: atoms with positive weights."""

    points: np.ndarray
    weights: np.ndarray = field(default=None)

    def __post_init__(self):
        pts = np.atleast_2d(np.asarray(self.points, dtype=float))
        if pts.ndim != 2 or pts.shape[0] == 0:
            raise DomainError("points must form a nonempty (n, d) array")
        if not np.all(np.isfinite(pts)):
            raise DomainError("points must be finite")
        if self.weights is None:
            w = np.full(pts.shape[0], 1.0 / pts.shape[0])
        else:
            w = np.asarray(self.weights, dtype=float).ravel()
            if w.shape[0] != pts.shape[0]:
                raise DomainError("one weight per point is required")
            if np.any(w <= 0):
                raise DomainError("weights must be positive")
            if abs(w.sum() - 1.0) > 1e-9:
                raise DomainError(f"weights sum to {w.sum()!r}, not 1")
            w = w / w.sum()
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "weights", w)

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    @property
    def size(self) -> int:
        return self.points.shape[0]

    @property
    def mean(self) -> np.ndarray:
        return self.weights @ self.points

    def project(self, u) -> EmpiricalLaw:
        """Law of ``<xi, u>`` (``u`` is used as given, not normalised)."""
        vals = self.points @ np.asarray(u, dtype=float)
        scale = max(1.0, float(np.abs(vals).max()))
        return EmpiricalLaw(vals, self.weights, merge_tol=1e-13 * scale)

    def affine(self, A, b=None) -> "WeightedSample":
        A = np.asarray(A, dtype=float)
        pts = self.points @ A.T
        if b is not None:
            pts = pts + np.asarray(b, dtype=float)
        return WeightedSample(pts, self.weights)

    def to_json(self) -> dict:
        return {"points": self.points.tolist(), "weights": self.weights.tolist()}

    @classmethod
    def from_json(cls, obj: dict) -> "WeightedSample":
        if "points" not in obj:
            raise DomainError("sample JSON needs a 'points' entry")
        return cls(np.asarray(obj["points"], dtype=float), obj.get("weights"))


def independent_sum(xi: WeightedSample, eta: WeightedSample) -> WeightedSample:
    """Exact distribution of ``xi + eta`` for independent discrete vectors."""
    pts = (xi.points[:, None, :] + eta.points[None, :, :]).reshape(-1, xi.dim)
    w = np.outer(xi.weights, eta.weights).ravel()
    return WeightedSample(pts, w / w.sum())
