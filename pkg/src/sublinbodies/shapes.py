"""Analytic convex shapes with exact projection laws and uniform sampling."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distributions import (
    AffineLaw,
    BallMarginalLaw,
    DomainError,
    PiecewiseLinearLaw,
    ScalarLaw,
    SumOfUniformsLaw,
    WeightedSample,
    uniform_law,
)
from .geometry import Polygon2, convex_hull, _clip


def make_rng(seed: int) -> np.random.Generator:
    """Counter-based generator; the only RNG used in the package."""
    return np.random.Generator(np.random.Philox(int(seed)))


def _unit(u) -> np.ndarray:
    u = np.asarray(u, dtype=float).ravel()
    n = float(np.linalg.norm(u))
    if n == 0.0:
        raise DomainError("direction must be nonzero")
    return u / n


def ball_volume(d: int) -> float:
    return math.pi ** (d / 2) / math.gamma(d / 2 + 1)


class ConvexShape:
    """Base class; subclasses are frozen dataclasses."""

    kind = "shape"

    @property
    def dim(self) -> int:
        raise NotImplementedError

    @property
    def volume(self) -> float:
        raise NotImplementedError

    @property
    def barycenter(self) -> np.ndarray:
        raise NotImplementedError

    def support(self, u) -> float:
        raise NotImplementedError

    def projection_law(self, u) -> ScalarLaw:
        raise NotImplementedError

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        raise NotImplementedError

    def is_symmetric(self, tol: float = 1e-12) -> bool:
        return True

    def as_polygon(self) -> Polygon2 | None:
        return None

    def outline(self, k: int = 256) -> np.ndarray:
        """Boundary points for drawing (planar shapes)."""
        th = 2 * np.pi * np.arange(k) / k
        U = np.stack([np.cos(th), np.sin(th)], axis=1)
        P = self.as_polygon()
        if P is not None:
            return P.vertices
        return np.array([self.touch_point(u) for u in U])

    def touch_point(self, u) -> np.ndarray:
        raise NotImplementedError

    @property
    def diameter(self) -> float:
        raise NotImplementedError


@dataclass(frozen=True)
class PolygonShape(ConvexShape):
    """Convex polygon given by its vertices (any order; hull is taken)."""

    vertices: np.ndarray
    kind = "polygon"

    def __post_init__(self):
        P = convex_hull(np.asarray(self.vertices, dtype=float))
        if P.n < 3 or P.area <= 0:
            raise DomainError("polygon must have positive area")
        object.__setattr__(self, "vertices", P.vertices)
        object.__setattr__(self, "_poly", P)

    @property
    def polygon(self) -> Polygon2:
        return self._poly

    def as_polygon(self) -> Polygon2:
        return self._poly

    @property
    def dim(self) -> int:
        return 2

    @property
    def volume(self) -> float:
        return self._poly.area

    @property
    def barycenter(self) -> np.ndarray:
        return self._poly.centroid

    @property
    def diameter(self) -> float:
        return self._poly.diameter

    def support(self, u) -> float:
        return float(self._poly.support(np.asarray(u, dtype=float)))

    def touch_point(self, u) -> np.ndarray:
        return self.vertices[int(np.argmax(self.vertices @ np.asarray(u, dtype=float)))]

    def is_symmetric(self, tol: float = 1e-12) -> bool:
        c = self.barycenter
        refl = 2 * c - self.vertices
        scale = max(1.0, self.diameter)
        d = np.linalg.norm(refl[:, None, :] - self.vertices[None, :, :], axis=2).min(axis=1)
        return bool(d.max() <= tol * scale * 1e3)

    # -- slice data -----------------------------------------------------
    def _slices(self, u: np.ndarray):
        """Knots of the projection and, at each knot, chord length and midpoint."""
        V = self.vertices
        s = V @ u
        diam = max(self.diameter, 1e-300)
        order = np.sort(s)
        keep = np.concatenate([[True], np.diff(order) > 1e-12 * diam])
        knots = order[keep]
        # chord endpoints at each knot: intersect the line <x,u>=s with edges
        A, B = V, np.roll(V, -1, axis=0)
        sa, sb = A @ u, B @ u
        lo, hi = np.minimum(sa, sb), np.maximum(sa, sb)
        w = np.array([-u[1], u[0]])
        K = knots[:, None]
        with np.errstate(divide="ignore", invalid="ignore"):
            t = np.where(sb != sa, (K - sa) / (sb - sa), 0.0)
        t = np.clip(t, 0.0, 1.0)
        pts = A[None, :, :] + t[..., None] * (B - A)[None, :, :]
        tw = pts @ w
        span = (K >= lo - 1e-12 * diam) & (K <= hi + 1e-12 * diam)
        # vertices lying exactly on the line contribute too
        big = np.where(span, tw, np.nan)
        tmin = np.nanmin(big, axis=1)
        tmax = np.nanmax(big, axis=1)
        length = np.clip(tmax - tmin, 0.0, None)
        length[0] = length[0] if length[0] > 1e-12 * diam else 0.0
        length[-1] = length[-1] if length[-1] > 1e-12 * diam else 0.0
        mid_w = (tmin + tmax) / 2
        return knots, length, mid_w, w

    def projection_law(self, u) -> PiecewiseLinearLaw:
        u = _unit(u)
        knots, length, _, _ = self._slices(u)
        return PiecewiseLinearLaw(knots, length / self.volume, normalize=True)

    def moment_density(self, u):
        """Knots with probability density and first-moment density in the
        direction perpendicular to ``u``; both are piecewise linear, their
        product (the vector moment density) piecewise quadratic."""
        u = _unit(u)
        knots, length, mid_w, w = self._slices(u)
        return knots, length / self.volume, mid_w, w

    def slice_moment(self, u, g, lo=None, hi=None) -> tuple[float, np.ndarray]:
        """``(E g(b), E xi g(b))`` with ``b = <xi, u>`` for uniform ``xi``.

        ``g`` is a vectorised weight function.  The integral is evaluated by
        Gauss-Legendre quadrature on each piece of the slice decomposition;
        ``g`` should be smooth on every piece (pass breakpoints of ``g`` by
        restricting ``lo``/``hi``).
        """
        u = _unit(u)
        knots, dens, mid_w, w = self.moment_density(u)
        lo = knots[0] if lo is None else max(lo, knots[0])
        hi = knots[-1] if hi is None else min(hi, knots[-1])
        if hi <= lo:
            return 0.0, np.zeros(2)
        x, wt = np.polynomial.legendre.leggauss(24)
        cuts = np.concatenate([[lo], knots[(knots > lo) & (knots < hi)], [hi]])
        a, b = cuts[:-1], cuts[1:]
        S = (a[:, None] + b[:, None]) / 2 + (b - a)[:, None] / 2 * x[None, :]
        W = (b - a)[:, None] / 2 * wt[None, :]
        S, W = S.ravel(), W.ravel()
        rho = np.interp(S, knots, dens)
        mw = np.interp(S, knots, mid_w)
        gv = np.asarray(g(S), dtype=float) * rho * W
        mass = float(gv.sum())
        vec = u * float((gv * S).sum()) + w * float((gv * mw).sum())
        return mass, vec

    def cap(self, u, level: float):
        """Probability and centroid of ``{x in K : <x, u> >= level}``."""
        u = _unit(u)
        V = _clip(self.vertices, -u, -level, 0.0)
        if V.shape[0] < 3:
            return 0.0, self.touch_point(u).astype(float)
        C = convex_hull(V)
        if C.n < 3:
            return 0.0, C.vertices.mean(axis=0)
        return C.area / self.volume, C.centroid

    def sample(self, n, rng):
        V = self.vertices
        tri_a = V[0]
        tri_b, tri_c = V[1:-1], V[2:]
        d1, d2 = tri_b - tri_a, tri_c - tri_a
        areas = np.abs(d1[:, 0] * d2[:, 1] - d1[:, 1] * d2[:, 0]) / 2
        idx = rng.choice(areas.size, size=n, p=areas / areas.sum())
        r1 = rng.random(n)
        r2 = rng.random(n)
        flip = r1 + r2 > 1
        r1 = np.where(flip, 1 - r1, r1)
        r2 = np.where(flip, 1 - r2, r2)
        return tri_a + r1[:, None] * (tri_b[idx] - tri_a) + r2[:, None] * (tri_c[idx] - tri_a)

    def to_json(self) -> dict:
        return {"type": "polygon", "vertices": self.vertices.tolist()}


@dataclass(frozen=True)
class BoxShape(ConvexShape):
    center: np.ndarray
    half_widths: np.ndarray
    kind = "box"

    def __post_init__(self):
        c = np.asarray(self.center, dtype=float).ravel()
        b = np.asarray(self.half_widths, dtype=float).ravel()
        if c.shape != b.shape:
            raise DomainError("box center and half-widths differ in dimension")
        if np.any(b <= 0):
            raise DomainError("box half-widths must be positive")
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "half_widths", b)

    @property
    def dim(self):
        return self.center.size

    @property
    def volume(self):
        return float(np.prod(2 * self.half_widths))

    @property
    def barycenter(self):
        return self.center.copy()

    @property
    def diameter(self):
        return 2 * float(np.linalg.norm(self.half_widths))

    def as_polygon(self):
        if self.dim != 2:
            return None
        bx, by = self.half_widths
        return Polygon2(self.center + np.array([[-bx, -by], [bx, -by], [bx, by], [-bx, by]]))

    def _poly_shape(self):
        return PolygonShape(self.as_polygon().vertices)

    def support(self, u):
        u = np.asarray(u, dtype=float)
        return float(self.center @ u + self.half_widths @ np.abs(u))

    def touch_point(self, u):
        return self.center + self.half_widths * np.sign(np.asarray(u, dtype=float))

    def projection_law(self, u):
        u = _unit(u)
        if self.dim == 2:
            return self._poly_shape().projection_law(u)
        b = self.half_widths * np.abs(u)
        shift = float(self.center @ u)
        nz = b[b > 1e-15 * b.max()]
        if nz.size == 1:
            return uniform_law(shift - nz[0], shift + nz[0])
        return AffineLaw(SumOfUniformsLaw(nz), 1.0, shift)

    def sample(self, n, rng):
        return self.center + self.half_widths * (2 * rng.random((n, self.dim)) - 1)

    def to_json(self):
        return {"type": "box", "center": self.center.tolist(), "half_widths": self.half_widths.tolist()}


@dataclass(frozen=True)
class BallShape(ConvexShape):
    center: np.ndarray
    radius: float
    kind = "ball"

    def __post_init__(self):
        c = np.asarray(self.center, dtype=float).ravel()
        if not self.radius > 0:
            raise DomainError("ball radius must be positive")
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "radius", float(self.radius))

    @property
    def dim(self):
        return self.center.size

    @property
    def volume(self):
        return ball_volume(self.dim) * self.radius**self.dim

    @property
    def barycenter(self):
        return self.center.copy()

    @property
    def diameter(self):
        return 2 * self.radius

    def support(self, u):
        u = np.asarray(u, dtype=float)
        return float(self.center @ u + self.radius * np.linalg.norm(u))

    def touch_point(self, u):
        return self.center + self.radius * _unit(u)

    def projection_law(self, u):
        u = np.asarray(u, dtype=float)
        u = _unit(u)
        return AffineLaw(BallMarginalLaw(self.dim), self.radius, float(self.center @ u))

    def sample(self, n, rng):
        g = rng.standard_normal((n, self.dim))
        g /= np.linalg.norm(g, axis=1, keepdims=True)
        r = rng.random(n) ** (1.0 / self.dim)
        return self.center + self.radius * r[:, None] * g

    def to_json(self):
        return {"type": "ball", "center": self.center.tolist(), "radius": self.radius}


@dataclass(frozen=True)
class EllipseShape(ConvexShape):
    """The set ``{x : (x - c)^T M^{-1} (x - c) <= 1}``; support ``sqrt(u^T M u)``."""

    center: np.ndarray
    matrix: np.ndarray
    kind = "ellipse"

    def __post_init__(self):
        c = np.asarray(self.center, dtype=float).ravel()
        M = np.asarray(self.matrix, dtype=float)
        if M.shape != (c.size, c.size):
            raise DomainError("ellipse matrix must be square of the center's dimension")
        if not np.allclose(M, M.T, atol=1e-12):
            raise DomainError("ellipse matrix must be symmetric")
        try:
            L = np.linalg.cholesky(M)
        except np.linalg.LinAlgError as exc:
            raise DomainError("ellipse matrix must be positive definite") from exc
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "matrix", M)
        object.__setattr__(self, "_chol", L)

    @property
    def dim(self):
        return self.center.size

    @property
    def volume(self):
        return ball_volume(self.dim) * math.sqrt(np.linalg.det(self.matrix))

    @property
    def barycenter(self):
        return self.center.copy()

    @property
    def diameter(self):
        return 2 * math.sqrt(float(np.linalg.eigvalsh(self.matrix).max()))

    def _scale(self, u):
        return math.sqrt(float(u @ self.matrix @ u))

    def support(self, u):
        u = np.asarray(u, dtype=float)
        return float(self.center @ u + self._scale(u))

    def touch_point(self, u):
        u = np.asarray(u, dtype=float)
        return self.center + self.matrix @ u / self._scale(u)

    def projection_law(self, u):
        u = _unit(u)
        return AffineLaw(BallMarginalLaw(self.dim), self._scale(u), float(self.center @ u))

    def sample(self, n, rng):
        unit = BallShape(np.zeros(self.dim), 1.0).sample(n, rng)
        return self.center + unit @ self._chol.T

    def to_json(self):
        return {"type": "ellipse", "center": self.center.tolist(), "matrix": self.matrix.tolist()}


@dataclass(frozen=True)
class L1BallShape(ConvexShape):
    center: np.ndarray
    radius: float
    kind = "l1ball"

    def __post_init__(self):
        c = np.asarray(self.center, dtype=float).ravel()
        if not self.radius > 0:
            raise DomainError("radius must be positive")
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "radius", float(self.radius))

    @property
    def dim(self):
        return self.center.size

    @property
    def volume(self):
        return (2 * self.radius) ** self.dim / math.factorial(self.dim)

    @property
    def barycenter(self):
        return self.center.copy()

    @property
    def diameter(self):
        return 2 * self.radius

    def as_polygon(self):
        if self.dim != 2:
            return None
        r = self.radius
        return Polygon2(self.center + np.array([[r, 0.0], [0.0, r], [-r, 0.0], [0.0, -r]]))

    def support(self, u):
        u = np.asarray(u, dtype=float)
        return float(self.center @ u + self.radius * np.abs(u).max())

    def touch_point(self, u):
        u = np.asarray(u, dtype=float)
        i = int(np.argmax(np.abs(u)))
        x = self.center.copy()
        x[i] += self.radius * np.sign(u[i])
        return x

    def projection_law(self, u):
        if self.dim != 2:
            raise DomainError("exact l1-ball projections are planar only")
        return PolygonShape(self.as_polygon().vertices).projection_law(u)

    def sample(self, n, rng):
        d = self.dim
        e = rng.exponential(size=(n, d + 1))
        x = e[:, :d] / e.sum(axis=1, keepdims=True)
        signs = np.where(rng.random((n, d)) < 0.5, -1.0, 1.0)
        return self.center + self.radius * signs * x

    def to_json(self):
        return {"type": "l1ball", "center": self.center.tolist(), "radius": self.radius}


# ---------------------------------------------------------------------------
# public helpers


def polygon_view(shape: ConvexShape) -> PolygonShape | None:
    """The shape as a :class:`PolygonShape` when it is a planar polygon."""
    if isinstance(shape, PolygonShape):
        return shape
    P = shape.as_polygon()
    return None if P is None else PolygonShape(P.vertices)


def project_shape(shape: ConvexShape, u) -> ScalarLaw:
    """Exact law of ``<xi, u>`` for ``xi`` uniform on ``shape`` (``u`` normalised)."""
    return shape.projection_law(u)


def sample_uniform(shape: ConvexShape, n: int, seed: int) -> WeightedSample:
    """``n`` i.i.d. uniform points with equal weights."""
    if n < 1:
        raise DomainError("sample size must be positive")
    pts = shape.sample(int(n), make_rng(seed))
    return WeightedSample(pts)


def regular_polygon(k: int, radius: float = 1.0, center=(0.0, 0.0), phase: float = 0.0) -> PolygonShape:
    th = phase + 2 * np.pi * np.arange(k) / k
    return PolygonShape(np.asarray(center) + radius * np.stack([np.cos(th), np.sin(th)], axis=1))


def random_polygon(rng: np.random.Generator, k: int = 8, radius: float = 1.0) -> PolygonShape:
    """Hull of ``k`` random points on a jittered circle (always convex, k >= 3)."""
    while True:
        th = np.sort(rng.uniform(0, 2 * np.pi, k))
        r = radius * rng.uniform(0.6, 1.0, k)
        pts = np.stack([r * np.cos(th), r * np.sin(th)], axis=1)
        P = convex_hull(pts)
        if P.n >= 3 and P.area > 0.05 * radius**2:
            return PolygonShape(P.vertices)


def shape_from_json(obj: dict) -> ConvexShape:
    try:
        kind = obj["type"]
        if kind == "polygon":
            return PolygonShape(np.asarray(obj["vertices"], dtype=float))
        if kind == "box":
            return BoxShape(obj["center"], obj["half_widths"])
        if kind == "ball":
            return BallShape(obj["center"], obj["radius"])
        if kind == "ellipse":
            return EllipseShape(obj["center"], obj["matrix"])
        if kind == "l1ball":
            return L1BallShape(obj["center"], obj["radius"])
    except KeyError as exc:
        raise DomainError(f"shape JSON is missing field {exc}") from exc
    raise DomainError(f"unknown shape type {obj.get('type')!r}")


def semicircle_pdf(s):
    s = np.asarray(s, dtype=float)
    return np.where(np.abs(s) <= 1, 2 * np.sqrt(np.clip(1 - s * s, 0, None)) / np.pi, 0.0)


__all__ = [
    "ConvexShape", "PolygonShape", "BoxShape", "BallShape", "EllipseShape", "L1BallShape",
    "project_shape", "sample_uniform", "shape_from_json", "regular_polygon", "random_polygon",
    "polygon_view", "make_rng", "ball_volume", "semicircle_pdf",
]
