"""Convex-body transforms generated by sublinear expectations.

The central object is a support field: for each direction ``u`` of a grid,
the value ``e(<xi, u>)`` together with a boundary point of the body in that
direction (``E xi gamma`` for a maximising dual density ``gamma``).  Fields
are turned into certified polygon sandwiches by
:func:`~sublinbodies.geometry.body_from_support`.
"""

from __future__ import annotations

import math
import warnings
from typing import Callable, Sequence

import numpy as np

from .distributions import DomainError, EmpiricalLaw, ScalarLaw, WeightedSample
from .geometry import (
    BodyEstimate,
    DirectionGrid,
    Polygon2,
    SupportField,
    aumann_integral,
    body_from_support,
    convex_hull,
    exact_avg_quantile_body,
    intersect_halfplanes,
)
from .risk import (
    AvgQuantile,
    EssSup,
    Expectile,
    ExpectationSpec,
    MaxExt,
    Mean,
    OneSidedMoment,
    Spectral,
    SpectralFunction,
    SpectralMeasure,
    avg_quantile,
    avg_quantiles,
    distortion,
    evaluate,
    expectile,
    is_spectral_type,
)
from .shapes import (
    BallShape,
    BoxShape,
    ConvexShape,
    EllipseShape,
    PolygonShape,
    polygon_view,
    sample_uniform,
)

EXACT_SWEEP_MAX_ATOMS = 300
MC_FALLBACK_SIZE = 100_000


class AtomicDepthWarning(UserWarning):
    """Depth regions of atomic laws depend on the chosen quantile version."""


Source = "WeightedSample | ConvexShape"


def _as_grid(grid, dim: int = 2) -> DirectionGrid:
    if isinstance(grid, DirectionGrid):
        return grid
    if dim == 2:
        return DirectionGrid.uniform(int(grid))
    return DirectionGrid.sphere(int(grid), dim)


def _source_dim(source) -> int:
    return source.dim


# ---------------------------------------------------------------------------
# spectral weight functions


def phi_function(spec: ExpectationSpec):
    """``(phi, breakpoints)`` for a spectral-type spec other than EssSup.

    ``phi`` is the nonincreasing density of the distortion on (0, 1) and
    ``breakpoints`` lists the levels in (0, 1) where it may jump or kink.
    """
    if isinstance(spec, Mean):
        return (lambda t: np.ones_like(np.asarray(t, dtype=float))), []
    if isinstance(spec, AvgQuantile):
        a = spec.alpha
        return (lambda t: np.where(np.asarray(t) < a, 1.0 / a, 0.0)), [a] if a < 1 else []
    if isinstance(spec, Spectral):
        nu = spec.measure
        sf = SpectralFunction(nu)
        bps = [a for a, _ in nu.atoms] + [p.lo for p in nu.pieces] + [p.hi for p in nu.pieces]
        return sf.phi, sorted({b for b in bps if 0 < b < 1})
    if isinstance(spec, MaxExt):
        phib, bb = phi_function(spec.base)
        m = spec.m

        def phi(t):
            t = np.asarray(t, dtype=float)
            return m * (1 - t) ** (m - 1) * phib(1 - (1 - t) ** m)

        return phi, sorted({1 - (1 - b) ** (1.0 / m) for b in bb})
    raise DomainError(f"no spectral density for {spec!r}")


# ---------------------------------------------------------------------------
# discrete sources


def _discrete_field(mu: WeightedSample, spec: ExpectationSpec, grid: DirectionGrid) -> SupportField:
    U = grid.vectors
    X, p = mu.points, mu.weights
    proj = X @ U.T  # (n, N)
    N = U.shape[0]
    if is_spectral_type(spec):
        Phi = distortion(spec)
        order = np.argsort(-proj, axis=0, kind="stable")
        T = np.cumsum(p[order], axis=0)
        T[-1] = 1.0
        T0 = np.vstack([np.zeros((1, N)), T[:-1]])
        dPhi = np.asarray(Phi(T), dtype=float) - np.asarray(Phi(T0), dtype=float)
        vals = (np.take_along_axis(proj, order, axis=0) * dPhi).sum(axis=0)
        touch = np.einsum("kj,kjd->jd", dPhi, X[order])
        return SupportField(grid, vals, touch)
    if isinstance(spec, OneSidedMoment):
        m = p @ proj
        c = proj - m
        cp = np.clip(c, 0.0, None)
        upm = p @ cp**spec.p
        norm = upm ** (1.0 / spec.p)
        if spec.p == 1.0:
            zeta = (c > 0).astype(float)
        else:
            with np.errstate(divide="ignore", invalid="ignore"):
                zeta = np.where(norm > 0, cp ** (spec.p - 1) / np.where(norm > 0, norm, 1.0) ** (spec.p - 1), 0.0)
        Ez = p @ zeta
        gam = 1.0 + spec.a * (zeta - Ez)
        vals = m + spec.a * norm
        touch = (gam * p[:, None]).T @ X
        return SupportField(grid, vals, touch)
    if isinstance(spec, Expectile):
        vals = np.empty(N)
        touch = np.empty((N, mu.dim))
        for j in range(N):
            law = EmpiricalLaw(proj[:, j], p)
            x = expectile(law, spec.tau)
            gam = np.where(proj[:, j] >= x, spec.tau, 1 - spec.tau)
            w = gam * p
            vals[j] = x
            touch[j] = w @ X / w.sum()
        return SupportField(grid, vals, touch)
    vals = np.array([evaluate(spec, EmpiricalLaw(proj[:, j], p)) for j in range(N)])
    return SupportField(grid, vals, None)


# ---------------------------------------------------------------------------
# shape sources


def _polygon_touch(K: PolygonShape, law: ScalarLaw, spec: ExpectationSpec, u: np.ndarray):
    xK = K.barycenter
    if isinstance(spec, Mean):
        return xK
    if isinstance(spec, AvgQuantile):
        if spec.alpha == 1.0:
            return xK
        return K.cap(u, law.quantile(1 - spec.alpha))[1]
    if isinstance(spec, EssSup):
        return K.touch_point(u).astype(float)
    if isinstance(spec, Spectral) and not spec.measure.pieces:
        out = np.zeros(2)
        for a, m in spec.measure.atoms:
            out += m * (xK if a == 1.0 else K.cap(u, law.quantile(1 - a))[1])
        return out
    if is_spectral_type(spec):
        phi, bps = phi_function(spec)
        g = lambda s: phi(np.clip(1.0 - np.asarray(law.cdf(s)), 0.0, 1.0))
        cuts = sorted({law.lower, law.upper, *[law.quantile(1 - b) for b in bps]})
        vec = np.zeros(2)
        for lo, hi in zip(cuts[:-1], cuts[1:]):
            vec += K.slice_moment(u, g, lo, hi)[1]
        return vec
    if isinstance(spec, OneSidedMoment):
        m = float(xK @ u)
        if spec.a == 0.0:
            return xK
        if spec.p == 1.0:
            P, c = K.cap(u, m)
            return xK + spec.a * P * (c - xK)
        upm = law.upper_partial_moment(m, spec.p)
        norm = upm ** (1.0 / spec.p)
        if norm <= 0:
            return xK
        g = lambda s: (np.clip(s - m, 0.0, None) / norm) ** (spec.p - 1)
        Ez, Exz = K.slice_moment(u, g, m, None)
        return xK + spec.a * (Exz - Ez * xK)
    if isinstance(spec, Expectile):
        x = expectile(law, spec.tau)
        P, c = K.cap(u, x)
        Pc_minus = xK - P * c
        t = spec.tau
        return (t * P * c + (1 - t) * Pc_minus) / (t * P + (1 - t) * (1 - P))
    return None


def _polygon_field(K: PolygonShape, spec: ExpectationSpec, grid: DirectionGrid) -> SupportField:
    N = grid.size
    vals = np.empty(N)
    touch = np.empty((N, 2))
    have = True
    for j, u in enumerate(grid.vectors):
        law = K.projection_law(u)
        vals[j] = evaluate(spec, law)
        if have:
            x = _polygon_touch(K, law, spec, u)
            if x is None:
                have = False
            else:
                touch[j] = x
    return SupportField(grid, vals, touch if have else None)


def _elliptic_field(shape, spec: ExpectationSpec, grid: DirectionGrid) -> SupportField:
    # e(<c,u> + s(u) b0) = <c,u> + s(u) e(b0) by equivariance
    base = shape.projection_law(np.eye(shape.dim)[0])
    e0 = evaluate(spec, base) - float(shape.center[0])
    if isinstance(shape, BallShape):
        e0 /= shape.radius
        M = shape.radius**2 * np.eye(shape.dim)
    else:
        e0 /= math.sqrt(float(shape.matrix[0, 0]))
        M = shape.matrix
    U = grid.vectors
    s = np.sqrt(np.einsum("ij,jk,ik->i", U, M, U))
    vals = U @ shape.center + s * e0
    touch = shape.center + e0 * (U @ M) / s[:, None]
    return SupportField(grid, vals, touch)


def support_field(source, spec: ExpectationSpec, grid, seed: int = 0) -> SupportField:
    """Support values (and touch points when available) of ``E_e(source)``."""
    grid = _as_grid(grid, _source_dim(source))
    if isinstance(source, WeightedSample):
        return _discrete_field(source, spec, grid)
    if isinstance(source, (BallShape, EllipseShape)):
        return _elliptic_field(source, spec, grid)
    K = polygon_view(source)
    if K is not None:
        return _polygon_field(K, spec, grid)
    if isinstance(source, BoxShape):
        vals = np.array([evaluate(spec, source.projection_law(u)) for u in grid.vectors])
        return SupportField(grid, vals, None)
    # no exact projection law: Monte Carlo sample
    return _discrete_field(sample_uniform(source, MC_FALLBACK_SIZE, seed), spec, grid)


# ---------------------------------------------------------------------------
# bodies


def _field_only(field: SupportField) -> BodyEstimate:
    return BodyEstimate(None, None, math.nan, field, unbounded=field.unbounded, notes={"dim": field.grid.dim})


def floating_like_body(source, spec: ExpectationSpec, grid=720) -> BodyEstimate:
    """The body with support function ``u -> e(<xi, u>)``."""
    grid = _as_grid(grid, _source_dim(source))
    if (isinstance(source, WeightedSample) and isinstance(spec, AvgQuantile) and source.dim == 2
            and source.size <= EXACT_SWEEP_MAX_ATOMS):
        P = exact_avg_quantile_body(source, spec.alpha)
        vals = P.support(grid.vectors)
        field = SupportField(grid, vals, None)
        return BodyEstimate(P, P, 0.0, field, exact=P)
    if isinstance(spec, EssSup) and isinstance(source, WeightedSample) and source.dim == 2:
        P = convex_hull(source.points)
        return BodyEstimate(P, P, 0.0, SupportField(grid, P.support(grid.vectors)), exact=P)
    field = support_field(source, spec, grid)
    if grid.dim != 2:
        return _field_only(field)
    return body_from_support(field)


def _quantile_offsets(source, level, grid: DirectionGrid) -> np.ndarray:
    """``q_level`` of every projection (inf-form); shape ``(N,)`` for a scalar
    level and ``(N, L)`` for an array of levels."""
    lv = np.atleast_1d(np.asarray(level, dtype=float))
    if isinstance(source, WeightedSample):
        proj = source.points @ grid.vectors.T
        order = np.argsort(proj, axis=0, kind="stable")
        cum = np.cumsum(source.weights[order], axis=0)
        srt = np.take_along_axis(proj, order, axis=0)
        out = np.empty((grid.size, lv.size))
        for i, t in enumerate(lv):
            idx = np.minimum((cum < t - 1e-12).sum(axis=0), proj.shape[0] - 1)
            out[:, i] = np.take_along_axis(srt, idx[None, :], axis=0)[0]
    else:
        K = polygon_view(source)
        src = K if K is not None else source
        out = np.array([np.atleast_1d(src.projection_law(u).quantile(lv)) for u in grid.vectors])
    return out[:, 0] if np.ndim(level) == 0 else out


def depth_region(source, delta: float, grid=720, warn: bool = True) -> Polygon2:
    """``{x : <x, u> <= q_{1-delta}(<xi, u>) for all grid u}``; may be empty."""
    if not (0.0 < delta < 1.0):
        raise DomainError("delta must lie in (0, 1)")
    grid = _as_grid(grid)
    if isinstance(source, WeightedSample) and warn:
        warnings.warn("depth region of an atomic law uses the lower quantile q_t = inf{s : F(s) >= t}",
                      AtomicDepthWarning, stacklevel=2)
    c = _quantile_offsets(source, 1.0 - delta, grid)
    P, _ = intersect_halfplanes(grid.vectors, c)
    return P


def _depth_support(P: Polygon2, grid: DirectionGrid):
    vals = P.support(grid.vectors)
    touch = P.vertices[np.argmax(P.vertices @ grid.vectors.T, axis=0)]
    return vals, touch


def integrated_depth(source, alpha: float, grid=720, nodes: int = 64) -> BodyEstimate:
    """``(1/alpha) int_0^alpha D_t dt`` as an Aumann integral.

    For equally weighted samples ``D_t`` is piecewise constant in ``t`` with
    breakpoints at multiples of ``1/n``, so the integral is an exact finite
    sum.  Other sources use Gauss-Legendre nodes in ``t``.
    """
    grid = _as_grid(grid)
    if not (0.0 < alpha <= 1.0):
        raise DomainError("alpha must lie in (0, 1]")
    if isinstance(source, WeightedSample) and np.ptp(source.weights) <= 1e-15:
        n = source.size
        edges = np.arange(0, math.floor(alpha * n + 1e-9) + 1) / n
        if edges[-1] < alpha - 1e-15:
            edges = np.concatenate([edges, [alpha]])
        ts = (edges[:-1] + edges[1:]) / 2
        ws = np.diff(edges) / alpha
    else:
        x, w = np.polynomial.legendre.leggauss(nodes)
        ts = alpha * (x + 1) / 2
        ws = w / 2
    table = _quantile_offsets(source, 1.0 - np.asarray(ts), grid)
    items = []
    for i, w in enumerate(ws):
        D, _ = intersect_halfplanes(grid.vectors, table[:, i])
        if D.is_empty:
            empty = Polygon2.empty()
            return BodyEstimate(empty, empty, 0.0, None, notes={"empty": True})
        vals, touch = _depth_support(D, grid)
        items.append((float(w), SupportField(grid, vals, touch)))
    return body_from_support(aumann_integral(items))


def ulam_floating(shape: ConvexShape, delta: float, grid=720) -> BodyEstimate:
    """Ulam floating body ``M_delta(K) = E_{delta / V(K)}(K)``."""
    V = shape.volume
    if not (0.0 < delta <= V * (1 + 1e-12)):
        raise DomainError("delta must lie in (0, V(K)]")
    return floating_like_body(shape, AvgQuantile(min(delta / V, 1.0)), grid)


def centroid_body(shape: ConvexShape, p: float = 1.0, a: float = 1.0, grid=720) -> BodyEstimate:
    """Body with support ``<x_K,u> + a (E(<xi - x_K, u>)_+^p)^{1/p}``."""
    return floating_like_body(shape, OneSidedMoment(p, a), grid)


def classical_centroid_body(shape: ConvexShape, grid=720) -> BodyEstimate:
    """``x_K + 2 (E_{1,1}(K) - x_K)``; the usual centroid body for symmetric K."""
    E = centroid_body(shape, 1.0, 1.0, grid)
    return _dilate(E, 2.0, shape.barycenter)


def _dilate(E: BodyEstimate, c: float, center) -> BodyEstimate:
    center = np.asarray(center, dtype=float)
    f = E.field
    vals = f.values * c + (1 - c) * (f.grid.vectors @ center)
    touch = None if f.touch is None else center + c * (f.touch - center)
    nf = SupportField(f.grid, vals, touch)
    return BodyEstimate(
        None if E.inner is None else E.inner.scaled(c, center),
        None if E.outer is None else E.outer.scaled(c, center),
        c * E.gap, nf,
        exact=None if E.exact is None else E.exact.scaled(c, center),
    )


def default_alpha_grid(k: int = 257) -> np.ndarray:
    return np.linspace(0.5, 1.0, k)


def centroid_via_ulam(shape: ConvexShape, alphas=None, grid=720) -> BodyEstimate:
    """``x_K + 2 conv U_alpha alpha (E_alpha(K) - x_K)`` for symmetric K.

    By symmetry ``alpha e_alpha`` increases on (0, 1/2], so only
    ``alpha`` in [1/2, 1] is scanned by default.
    """
    if not shape.is_symmetric():
        raise DomainError("centroid body via floating bodies needs a symmetric shape")
    alphas = default_alpha_grid() if alphas is None else np.asarray(alphas, dtype=float)
    grid = _as_grid(grid)
    K = polygon_view(shape)
    xK = shape.barycenter
    N = grid.size
    vals = np.empty(N)
    touch = np.empty((N, 2))
    for j, u in enumerate(grid.vectors):
        law = shape.projection_law(u)
        c0 = float(xK @ u)
        scores = law.tail_integrals(alphas) - alphas * c0
        k = int(np.argmax(scores))
        a = float(alphas[k])
        vals[j] = c0 + 2 * scores[k]
        if a >= 1.0:
            pt = xK
        elif K is not None:
            pt = K.cap(u, law.quantile(1 - a))[1]
        else:
            pt = _elliptic_touch(shape, u, avg_quantile(law, a) - c0)
        touch[j] = xK + 2 * a * (pt - xK)
    return body_from_support(SupportField(grid, vals, touch))


def _elliptic_touch(shape, u, excess: float) -> np.ndarray:
    # boundary point of a centred dilate of the shape with support excess in direction u
    M = _shape_matrix(shape)
    Mu = M @ u
    return shape.barycenter + excess * Mu / float(u @ Mu)


def _shape_matrix(shape) -> np.ndarray:
    if isinstance(shape, BallShape):
        return shape.radius**2 * np.eye(shape.dim)
    if isinstance(shape, EllipseShape):
        return shape.matrix
    raise DomainError("only elliptic shapes have a shape matrix")


def expectile_transform(shape: ConvexShape, tau: float, grid=720, t_grid: int = 256):
    """Expectile body by direct evaluation and by the floating-body mixture.

    Returns ``(direct, representation)``.  The representation scans
    ``alpha`` in (0, 1] and uses ``x_K + psi(alpha) (E_alpha(K) - x_K)`` with
    ``psi(alpha) = alpha (2 tau - 1) / (alpha (2 tau - 1) + 1 - tau)``.
    """
    grid = _as_grid(grid)
    direct = floating_like_body(shape, Expectile(tau), grid)
    alphas = np.arange(1, t_grid + 1) / t_grid
    psi = alphas * (2 * tau - 1) / (alphas * (2 * tau - 1) + (1 - tau))
    xK = shape.barycenter
    K = polygon_view(shape)
    N = grid.size
    vals = np.empty(N)
    touch = np.empty((N, 2))
    for j, u in enumerate(grid.vectors):
        law = shape.projection_law(u)
        c0 = float(xK @ u)
        tails = avg_quantiles(law, alphas) - c0
        scores = psi * tails
        k = int(np.argmax(scores))
        vals[j] = c0 + scores[k]
        a = float(alphas[k])
        if a >= 1.0 or psi[k] == 0:
            pt = xK
        elif K is not None:
            pt = K.cap(u, law.quantile(1 - a))[1]
        else:
            pt = _elliptic_touch(shape, u, tails[k])
        touch[j] = xK + psi[k] * (pt - xK)
    rep = body_from_support(SupportField(grid, vals, touch))
    return direct, rep


def _gauss_alpha(nodes: int):
    x, w = np.polynomial.legendre.leggauss(nodes)
    return (x + 1) / 2, w / 2


def expected_polytope(shape: ConvexShape, m: int, grid=720, nodes: int = 64, tol: float = 1e-8) -> BodyEstimate:
    """``m(m-1) int E_alpha(K) alpha (1-alpha)^{m-2} d alpha`` as an Aumann integral.

    The node count starts at ``nodes`` and doubles (up to 1024) until the
    support values change by less than ``tol``.
    """
    if m < 1:
        raise DomainError("m must be at least 1")
    grid = _as_grid(grid)
    xK = shape.barycenter
    if m == 1:
        P = Polygon2(xK[None, :])
        vals = grid.vectors @ xK
        return BodyEstimate(P, P, 0.0, SupportField(grid, vals, np.tile(xK, (grid.size, 1))), exact=P)
    K = polygon_view(shape)
    laws = [shape.projection_law(u) for u in grid.vectors]

    def values(k):
        a, w = _gauss_alpha(k)
        dens = m * (m - 1) * a * (1 - a) ** (m - 2) * w
        ev = np.array([avg_quantiles(L, a) for L in laws])
        return a, dens, ev @ dens

    k = nodes
    a, dens, v = values(k)
    while k < 1024:
        a2, dens2, v2 = values(2 * k)
        done = np.max(np.abs(v2 - v)) < tol
        k, a, dens, v = 2 * k, a2, dens2, v2
        if done:
            break
    items = []
    ev = np.array([avg_quantiles(L, a) for L in laws])
    for i, (x, w) in enumerate(zip(a, dens)):
        vals = ev[:, i]
        if K is not None:
            touch = np.array([K.cap(u, L.quantile(1 - x))[1] for u, L in zip(grid.vectors, laws)])
        else:
            touch = np.array([_elliptic_touch(shape, u, v - u @ xK) for u, v in zip(grid.vectors, vals)])
        items.append((float(w), SupportField(grid, vals, touch)))
    field = aumann_integral(items)
    est = body_from_support(field)
    est.notes["nodes"] = k
    return est


def kusuoka_body(source, measures: Sequence[SpectralMeasure], grid=720) -> BodyEstimate:
    """Body with support ``sup_nu int e_alpha nu(d alpha)`` over a family."""
    if len(measures) == 0:
        raise DomainError("Kusuoka body of an empty family")
    grid = _as_grid(grid, _source_dim(source))
    best = None
    for nu in measures:
        f = support_field(source, Spectral(nu), grid)
        if best is None:
            best = f
            continue
        better = f.values > best.values
        vals = np.where(better, f.values, best.values)
        touch = None
        if f.touch is not None and best.touch is not None:
            touch = np.where(better[:, None], f.touch, best.touch)
        best = SupportField(grid, vals, touch)
    if grid.dim != 2:
        return _field_only(best)
    return body_from_support(best)


def max_extension_spectral_family(law: ScalarLaw, c: float, m: int) -> float:
    """``m(c+1) int_0^1 q_s s^{(c+1)m - 1} ds``."""
    if c < 0 or m < 1:
        raise DomainError("need c >= 0 and m >= 1")
    k = (c + 1.0) * m
    if isinstance(law, EmpiricalLaw):
        cum = law.cumulative
        prev = np.concatenate([[0.0], cum[:-1]])
        return float(law.values @ (cum**k - prev**k))
    from scipy import integrate

    f = lambda s: float(law.quantile(min(max(s, 1e-300), 1 - 1e-16))) * k * s ** (k - 1)
    pts = None
    if hasattr(law, "knots"):
        pts = [float(law.cdf(x)) for x in law.knots if 0 < law.cdf(x) < 1]
    val, _ = integrate.quad(f, 0.0, 1.0, points=pts or None, epsabs=1e-13, epsrel=1e-11, limit=400)
    return val


__all__ = [
    "AtomicDepthWarning", "phi_function", "support_field", "floating_like_body", "depth_region",
    "integrated_depth", "ulam_floating", "centroid_body", "classical_centroid_body",
    "centroid_via_ulam", "expectile_transform", "expected_polytope", "kusuoka_body",
    "max_extension_spectral_family", "default_alpha_grid",
]
