"""Planar convex geometry: polygons, hulls, clipping, Hausdorff distances,
Minkowski sums, polars, support-function sandwiches and Aumann integrals.

Polygons are stored as CCW vertex arrays.  Degenerate polygons (a single
point or a segment) are allowed and every routine here accepts them.  All
predicates use absolute tolerances scaled by the size of the input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

import numpy as np

from .distributions import DomainError, WeightedSample

# ---------------------------------------------------------------------------
# polygons


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class Polygon2:
    """Convex polygon with CCW vertices; may be empty, a point or a segment."""

    vertices: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float).reshape(-1, 2)
        object.__setattr__(self, "vertices", v)

    # basic queries -------------------------------------------------------
    @property
    def n(self) -> int:
        return self.vertices.shape[0]

    @property
    def is_empty(self) -> bool:
        return self.n == 0

    @property
    def dim(self) -> int:
        """Affine dimension: -1 empty, 0 point, 1 segment, 2 polygon."""
        return min(self.n, 3) - 1

    @property
    def area(self) -> float:
        if self.n < 3:
            return 0.0
        x, y = self.vertices[:, 0], self.vertices[:, 1]
        return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))

    @property
    def centroid(self) -> np.ndarray:
        if self.is_empty:
            raise DomainError("empty polygon has no centroid")
        if self.n < 3:
            return self.vertices.mean(axis=0)
        v = self.vertices - self.vertices[0]
        w = np.roll(v, -1, axis=0)
        cr = v[:, 0] * w[:, 1] - v[:, 1] * w[:, 0]
        a = cr.sum() / 2
        c = ((v + w) * cr[:, None]).sum(axis=0) / (6 * a)
        return c + self.vertices[0]

    @property
    def diameter(self) -> float:
        if self.n < 2:
            return 0.0
        d = self.vertices[:, None, :] - self.vertices[None, :, :]
        return float(np.sqrt((d**2).sum(-1)).max())

    @property
    def scale(self) -> float:
        if self.is_empty:
            return 1.0
        return max(1.0, float(np.abs(self.vertices).max()))

    def support(self, u) -> np.ndarray | float:
        """Support function at one direction ``(2,)`` or many ``(k, 2)``."""
        if self.is_empty:
            raise DomainError("support of an empty polygon")
        u = np.asarray(u, dtype=float)
        if u.ndim == 2 and self.n >= 3 and u.shape[0] * self.n > 200_000:
            return self._support_search(u)
        vals = (self.vertices @ u.T).max(axis=0)
        return float(vals) if np.ndim(vals) == 0 else vals

    def _support_search(self, U: np.ndarray) -> np.ndarray:
        # edge normal angles of a CCW convex polygon increase around the circle;
        # the start vertex of the first edge whose normal angle passes theta is extreme
        V = self.vertices
        e = np.roll(V, -1, axis=0) - V
        phi = np.unwrap(np.arctan2(-e[:, 0], e[:, 1]))
        theta = np.arctan2(U[:, 1], U[:, 0])
        theta = phi[0] + np.mod(theta - phi[0], 2 * np.pi)
        idx = np.searchsorted(phi, theta)
        n = V.shape[0]
        cand = np.stack([(idx - 1) % n, idx % n, (idx + 1) % n], axis=1)
        return np.einsum("kcj,kj->kc", V[cand], U).max(axis=1)

    def edges(self):
        """Outward unit normals and offsets ``<x, n> <= c`` of a 2-D polygon."""
        if self.n < 3:
            raise DomainError("edges need a 2-dimensional polygon")
        e = np.roll(self.vertices, -1, axis=0) - self.vertices
        nrm = np.stack([e[:, 1], -e[:, 0]], axis=1)
        nrm /= np.linalg.norm(nrm, axis=1, keepdims=True)
        return nrm, np.einsum("ij,ij->i", nrm, self.vertices)

    def transform(self, A, b=None) -> "Polygon2":
        A = np.asarray(A, dtype=float)
        pts = self.vertices @ A.T
        if b is not None:
            pts = pts + np.asarray(b, dtype=float)
        return convex_hull(pts)

    def scaled(self, c: float, center=None) -> "Polygon2":
        center = np.zeros(2) if center is None else np.asarray(center, dtype=float)
        return convex_hull(center + c * (self.vertices - center))

    def translated(self, t) -> "Polygon2":
        return Polygon2(self.vertices + np.asarray(t, dtype=float))

    def to_json(self) -> dict:
        if self.is_empty:
            return {"empty": True}
        return {"vertices": self.vertices.tolist()}

    @classmethod
    def empty(cls) -> "Polygon2":
        return cls(np.zeros((0, 2)))


def convex_hull(points, rel_tol: float = 1e-12) -> Polygon2:
    """Monotone-chain hull; collinear and duplicate points are dropped."""
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    if pts.shape[0] == 0:
        return Polygon2.empty()
    pts = np.unique(pts, axis=0)  # lexicographic sort
    if pts.shape[0] == 1:
        return Polygon2(pts)
    scale = max(1e-300, float(np.ptp(pts, axis=0).max()))
    tol = rel_tol * scale * scale

    def half(seq):
        out: list = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= tol:
                out.pop()
            out.append(p)
        return out

    P = [tuple(p) for p in pts]
    lower = half(P)
    upper = half(P[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        # collinear input: keep the two extreme points
        a, b = pts[0], pts[-1]
        if np.linalg.norm(b - a) <= rel_tol * max(1.0, float(np.abs(pts).max())):
            return Polygon2(a[None, :])
        return Polygon2(np.array([a, b]))
    return Polygon2(np.array(hull))


# ---------------------------------------------------------------------------
# halfspaces and clipping


@dataclass(frozen=True)
class Halfspace:
    """The set ``{x : <x, normal> <= offset}`` with a unit normal."""

    normal: np.ndarray
    offset: float

    def __post_init__(self):
        n = np.asarray(self.normal, dtype=float)
        norm = float(np.linalg.norm(n))
        if norm == 0:
            raise DomainError("halfspace normal must be nonzero")
        object.__setattr__(self, "normal", n / norm)
        object.__setattr__(self, "offset", float(self.offset) / norm)


def _clip(V: np.ndarray, n: np.ndarray, c: float, tol: float) -> np.ndarray:
    d = V @ n - c
    inside = d <= tol
    if inside.all():
        return V
    if not inside.any():
        return V[:0]
    k = V.shape[0]
    if k == 1:
        return V
    nxt = np.roll(np.arange(k), -1)
    d1 = d[nxt]
    cross = inside != inside[nxt]
    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.where(cross, d / (d - d1), 0.0)
    P = V + t[:, None] * (V[nxt] - V)
    # each edge emits its start (if kept) then the crossing point (if any)
    keep = np.stack([inside, cross], axis=1).ravel()
    pts = np.stack([V, P], axis=1).reshape(-1, 2)
    return pts[keep]


def _sweep_halfplanes(N: np.ndarray, c: np.ndarray, eps: float):
    """Angle-sorted deque intersection (O(n log n)); ``None`` when it gives up."""
    ang = np.arctan2(N[:, 1], N[:, 0])
    order = np.lexsort((c, ang))
    ang, N, c = ang[order], N[order], c[order]
    keep = np.concatenate([[True], np.diff(ang) > 1e-15])
    ang, N, c = ang[keep], N[keep], c[keep]
    nx, ny, cc = N[:, 0].tolist(), N[:, 1].tolist(), c.tolist()

    def meet(i, j):
        det = nx[i] * ny[j] - ny[i] * nx[j]
        if abs(det) < 1e-15:
            return None
        return ((cc[i] * ny[j] - cc[j] * ny[i]) / det, (nx[i] * cc[j] - nx[j] * cc[i]) / det)

    def out(p, k):
        return nx[k] * p[0] + ny[k] * p[1] - cc[k] > eps

    dq: list = []
    pts: list = []  # pts[i] = meet(dq[i], dq[i+1])
    for k in range(len(cc)):
        while len(dq) >= 2 and out(pts[-1], k):
            dq.pop()
            pts.pop()
        while len(dq) >= 2 and out(pts[0], k):
            dq.pop(0)
            pts.pop(0)
        if dq:
            p = meet(dq[-1], k)
            if p is None:
                return None
            pts.append(p)
        dq.append(k)
    while len(dq) >= 3 and out(pts[-1], dq[0]):
        dq.pop()
        pts.pop()
    while len(dq) >= 3 and out(pts[0], dq[-1]):
        dq.pop(0)
        pts.pop(0)
    if len(dq) < 3:
        return None
    last = meet(dq[-1], dq[0])
    if last is None:
        return None
    return np.array(pts + [last])


def intersect_halfplanes(normals, offsets, box: float | None = None):
    """Intersect ``{<x, n_i> <= c_i}``.

    Returns ``(polygon, unbounded)``.  The polygon is empty for an infeasible
    system; when the intersection is unbounded the returned polygon is the
    intersection with a large bounding box.  An angle-sorted sweep is tried
    first and validated against every constraint; incremental clipping is the
    fallback.
    """
    N = np.asarray(normals, dtype=float).reshape(-1, 2)
    c = np.asarray(offsets, dtype=float).ravel()
    if N.shape[0] != c.size:
        raise DomainError("one offset per normal is required")
    norms = np.linalg.norm(N, axis=1)
    if np.any(norms == 0):
        raise DomainError("halfplane normals must be nonzero")
    N, c = N / norms[:, None], c / norms
    if not np.all(np.isfinite(c)):
        keep = c < np.inf
        if np.any(c == -np.inf):
            return Polygon2.empty(), False
        N, c = N[keep], c[keep]
    big = box if box is not None else 1e6 * (float(np.abs(c).max(initial=0.0)) + 1.0)
    boxN = np.array([[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]])
    scale = float(np.abs(c).max(initial=0.0)) + 1.0
    V = _sweep_halfplanes(np.vstack([N, boxN]), np.concatenate([c, np.full(4, big)]), 1e-13 * scale)
    if V is not None and V.size and np.all(np.isfinite(V)):
        tol = 1e-9 * max(scale, float(np.abs(V).max()))
        P = _tidy(V)
        if P.n >= 3 and np.all(P.support(N) - c <= tol):
            if np.abs(V).max() >= big * (1 - 1e-9):
                return P, True
            return P, False
    return _intersect_by_clipping(N, c, big)


def _intersect_by_clipping(N: np.ndarray, c: np.ndarray, big: float):
    def run(B, center):
        V = center + B * np.array([[-1.0, -1.0], [1.0, -1.0], [1.0, 1.0], [-1.0, 1.0]])
        tol = 1e-13 * (B + float(np.abs(center).max()))
        for i in range(N.shape[0]):
            V = _clip(V, N[i], c[i], tol)
            if V.shape[0] == 0:
                break
        return V

    V = run(big, np.zeros(2))
    if V.shape[0] == 0:
        return Polygon2.empty(), False
    if np.abs(V).max() >= big * (1 - 1e-9):
        return convex_hull(V), True
    # second pass on a snug box for accuracy
    lo, hi = V.min(axis=0), V.max(axis=0)
    center = (lo + hi) / 2
    half = max(float((hi - lo).max()), 1e-12 * max(1.0, float(np.abs(center).max()))) * 1.5 + 1e-300
    V2 = run(half, center)
    if V2.shape[0] == 0:
        V2 = V
    return _tidy(V2), False


def _tidy(V: np.ndarray) -> Polygon2:
    scale = max(1.0, float(np.abs(V).max()))
    # snap near-duplicates produced by clipping through a vertex
    if V.shape[0] > 1:
        d = np.linalg.norm(np.roll(V, -1, axis=0) - V, axis=1)
        V = V[d > 1e-13 * scale] if np.any(d > 1e-13 * scale) else V[:1]
    return convex_hull(V)


def halfspace_intersection(halfspaces: Sequence[Halfspace]):
    """Intersection of :class:`Halfspace` objects; returns ``(polygon, unbounded)``."""
    if len(halfspaces) == 0:
        return Polygon2.empty(), True
    N = np.array([h.normal for h in halfspaces])
    c = np.array([h.offset for h in halfspaces])
    return intersect_halfplanes(N, c)


# ---------------------------------------------------------------------------
# metric and algebraic operations


def _point_set_distance(pts: np.ndarray, P: Polygon2, chunk: int = 1024) -> np.ndarray:
    V = P.vertices
    if P.n == 1:
        return np.linalg.norm(pts - V[0], axis=1)
    A = V
    B = np.roll(V, -1, axis=0)
    if P.n == 2:
        A, B = V[:1], V[1:]
    AB = B - A
    L2 = np.maximum((AB**2).sum(axis=1), 1e-300)
    out = np.empty(pts.shape[0])
    if P.n >= 3:
        nrm, off = P.edges()
    for s in range(0, pts.shape[0], chunk):
        Q = pts[s:s + chunk]
        AP = Q[:, None, :] - A[None, :, :]
        t = np.clip((AP * AB[None]).sum(-1) / L2[None], 0.0, 1.0)
        proj = A[None] + t[..., None] * AB[None]
        dist = np.sqrt(((Q[:, None, :] - proj) ** 2).sum(-1)).min(axis=1)
        if P.n >= 3:
            inside = np.all(Q @ nrm.T - off <= 0.0, axis=1)
            dist = np.where(inside, 0.0, dist)
        out[s:s + chunk] = dist
    return out


def directed_hausdorff(P: Polygon2, Q: Polygon2) -> float:
    """``sup_{x in P} dist(x, Q)``; the sup is attained at a vertex of P."""
    if P.is_empty or Q.is_empty:
        raise DomainError("Hausdorff distance needs nonempty polygons")
    return float(_point_set_distance(P.vertices, Q).max())


def hausdorff(P: Polygon2, Q: Polygon2) -> float:
    """Exact Hausdorff distance between two convex polygons."""
    if P.is_empty or Q.is_empty:
        raise DomainError("Hausdorff distance needs nonempty polygons")
    if P.n >= 3 and Q.n >= 3 and P.n * Q.n > 4096:
        return _hausdorff_support(P, Q)
    return max(directed_hausdorff(P, Q), directed_hausdorff(Q, P))


def _normal_angles(V: np.ndarray) -> np.ndarray:
    e = np.roll(V, -1, axis=0) - V
    return np.unwrap(np.arctan2(-e[:, 0], e[:, 1]))


def _extreme_index(V: np.ndarray, phi: np.ndarray, theta: np.ndarray) -> np.ndarray:
    t = phi[0] + np.mod(theta - phi[0], 2 * np.pi)
    return np.searchsorted(phi, t) % V.shape[0]


def _hausdorff_support(P: Polygon2, Q: Polygon2) -> float:
    # sup_u |h_P(u) - h_Q(u)|: between consecutive edge-normal angles of either
    # polygon both maximising vertices are fixed, so the difference is <w, u>
    # for w = v_P - v_Q, maximal at an end or where u is parallel to +-w
    phiP, phiQ = _normal_angles(P.vertices), _normal_angles(Q.vertices)
    B = np.unique(np.mod(np.concatenate([phiP, phiQ]), 2 * np.pi))
    lo = B
    hi = np.concatenate([B[1:], [B[0] + 2 * np.pi]])
    mid = (lo + hi) / 2
    W = P.vertices[_extreme_index(P.vertices, phiP, mid)] - Q.vertices[_extreme_index(Q.vertices, phiQ, mid)]
    end = lambda th: np.abs(W[:, 0] * np.cos(th) + W[:, 1] * np.sin(th))
    best = np.maximum(end(lo), end(hi))
    wa = np.arctan2(W[:, 1], W[:, 0])
    nw = np.hypot(W[:, 0], W[:, 1])
    for a in (wa, wa + np.pi):
        inside = np.mod(a - lo, 2 * np.pi) < (hi - lo)
        best = np.where(inside, np.maximum(best, nw), best)
    return float(best.max())


def _lowest(V: np.ndarray) -> int:
    return int(np.lexsort((V[:, 0], V[:, 1]))[0])


def minkowski_sum(P: Polygon2, Q: Polygon2) -> Polygon2:
    """Minkowski sum by merging edge sequences sorted by angle."""
    if P.is_empty or Q.is_empty:
        raise DomainError("Minkowski sum needs nonempty polygons")
    start = P.vertices[_lowest(P.vertices)] + Q.vertices[_lowest(Q.vertices)]
    edges = []
    for R in (P, Q):
        if R.n < 2:
            continue
        V = np.roll(R.vertices, -_lowest(R.vertices), axis=0)
        E = np.roll(V, -1, axis=0) - V
        edges.append(E)
    if not edges:
        return Polygon2(start[None, :])
    E = np.concatenate(edges)
    E = E[np.linalg.norm(E, axis=1) > 0]
    ang = np.mod(np.arctan2(E[:, 1], E[:, 0]), 2 * np.pi)
    ang[ang > 2 * np.pi - 1e-15] = 0.0
    E = E[np.argsort(ang, kind="stable")]
    pts = start + np.concatenate([np.zeros((1, 2)), np.cumsum(E, axis=0)[:-1]])
    return convex_hull(pts)


def polar(P: Polygon2) -> Polygon2:
    """Polar body ``{y : <x, y> <= 1 for all x in P}``."""
    if P.n < 3:
        raise DomainError("polar needs a 2-dimensional polygon")
    nrm, off = P.edges()
    if np.any(off <= 1e-12 * P.scale):
        raise DomainError("origin must lie in the interior of the polygon")
    return convex_hull(nrm / off[:, None])


def containment_excess(P: Polygon2, Q: Polygon2) -> float:
    """How far Q sticks out of P: largest edge-inequality violation of a
    vertex of Q (distance to P for degenerate P).  ``-inf`` for empty Q."""
    if Q.is_empty:
        return -math.inf
    if P.is_empty:
        return math.inf
    if P.n >= 3:
        nrm, off = P.edges()
        return float(np.max(Q.vertices @ nrm.T - off))
    return float(np.max(_point_set_distance(Q.vertices, P)))


def contains(P: Polygon2, Q: Polygon2, tol: float = 1e-9) -> bool:
    """True when every vertex of Q lies in P up to ``tol``."""
    return containment_excess(P, Q) <= tol


def circumscription_gap(diam: float, grid: "DirectionGrid") -> float:
    """``diam (1/cos(g/2) - 1)`` for the largest angular gap ``g`` of the grid."""
    return float(diam * (1.0 / math.cos(grid.max_gap / 2) - 1.0))


# ---------------------------------------------------------------------------
# direction grids and support fields


@dataclass(frozen=True)
class DirectionGrid:
    """Finite list of unit directions."""

    vectors: np.ndarray

    def __post_init__(self):
        U = np.asarray(self.vectors, dtype=float)
        if U.ndim != 2 or U.shape[0] < 3:
            raise DomainError("a direction grid needs at least 3 directions")
        norms = np.linalg.norm(U, axis=1)
        if np.any(np.abs(norms - 1.0) > 1e-12):
            U = U / norms[:, None]
        object.__setattr__(self, "vectors", U)

    @classmethod
    def uniform(cls, N: int, offset: float = 0.0) -> "DirectionGrid":
        th = offset + 2 * np.pi * np.arange(N) / N
        return cls(np.stack([np.cos(th), np.sin(th)], axis=1))

    @classmethod
    def sphere(cls, N: int, dim: int, seed: int = 0) -> "DirectionGrid":
        """Seeded random directions on the unit sphere of R^dim."""
        rng = np.random.Generator(np.random.Philox(seed))
        g = rng.standard_normal((N, dim))
        return cls(g / np.linalg.norm(g, axis=1, keepdims=True))

    @property
    def size(self) -> int:
        return self.vectors.shape[0]

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    @property
    def angles(self) -> np.ndarray:
        return np.arctan2(self.vectors[:, 1], self.vectors[:, 0])

    def is_equiangular(self) -> bool:
        if self.dim != 2:
            return False
        a = np.sort(np.mod(self.angles, 2 * np.pi))
        gaps = np.diff(np.concatenate([a, [a[0] + 2 * np.pi]]))
        return bool(np.ptp(gaps) < 1e-9)

    @property
    def max_gap(self) -> float:
        """Largest angular gap between consecutive directions (2-D only)."""
        a = np.sort(np.mod(self.angles, 2 * np.pi))
        return float(np.diff(np.concatenate([a, [a[0] + 2 * np.pi]])).max())


@dataclass(frozen=True)
class SupportField:
    """Support values on a grid, with optional touch points."""

    grid: DirectionGrid
    values: np.ndarray
    touch: np.ndarray | None = None
    unbounded: bool = False

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float).ravel()
        if v.size != self.grid.size:
            raise DomainError("one support value per direction is required")
        object.__setattr__(self, "values", v)
        if self.touch is not None:
            t = np.asarray(self.touch, dtype=float).reshape(self.grid.size, -1)
            object.__setattr__(self, "touch", t)
        if not self.unbounded and not np.all(np.isfinite(v)):
            object.__setattr__(self, "unbounded", True)

    def scaled(self, w: float) -> "SupportField":
        t = None if self.touch is None else w * self.touch
        return SupportField(self.grid, w * self.values, t, self.unbounded)

    def to_json(self) -> dict:
        return {"angles": self.grid.angles.tolist(), "values": self.values.tolist()}


def sublinearity_violation(field: SupportField) -> float:
    """Largest excess ``h_k |u_i + u_j| - h_i - h_j`` over grid triples.

    For an equiangular 2-D grid of size N, ``u_i + u_j`` is parallel to a grid
    direction exactly when ``i + j`` is even; all such triples are scanned.
    """
    g = field.grid
    if g.dim != 2 or not g.is_equiangular():
        raise DomainError("sublinearity scan needs an equiangular planar grid")
    N = g.size
    order = np.argsort(np.mod(g.angles - g.angles[0], 2 * np.pi))
    h = field.values[order]
    worst = -np.inf
    idx = np.arange(N)
    for s in range(1, N // 2):
        # pairs (i, i + 2s) have bisector i + s
        j = (idx + 2 * s) % N
        k = (idx + s) % N
        norm = 2 * math.cos(math.pi * 2 * s / N)
        if norm <= 0:
            continue
        worst = max(worst, float((h[k] * norm - h - h[j]).max()))
    return worst


@dataclass
class BodyEstimate:
    """Certified sandwich ``inner ⊆ body ⊆ outer`` with a Hausdorff gap."""

    inner: Polygon2 | None
    outer: Polygon2 | None
    gap: float
    field: SupportField | None = None
    unbounded: bool = False
    exact: Polygon2 | None = None
    notes: dict = dc_field(default_factory=dict)

    @property
    def body(self) -> Polygon2:
        """Best single polygon: the exact one if known, else the outer one."""
        if self.exact is not None:
            return self.exact
        if self.outer is None:
            raise DomainError("unbounded body has no polygon")
        return self.outer

    def support(self, u):
        return self.body.support(u)

    def to_json(self) -> dict:
        if self.unbounded:
            return {"unbounded": True}
        P = self.body
        if P.is_empty:
            return {"empty": True}
        out = {"vertices": P.vertices.tolist(), "gap": float(self.gap)}
        if self.inner is not None and self.exact is None:
            out["inner_vertices"] = self.inner.vertices.tolist()
        if self.field is not None:
            out["support"] = self.field.to_json()
        return out


def guaranteed_inner(outer: Polygon2) -> Polygon2:
    """Part of ``outer`` contained in every body whose support values are
    attained on all edges of ``outer``.

    Such a body meets each edge, so it contains the hull of one point per
    edge; that hull always contains the region behind the chords joining the
    two neighbours of each vertex.
    """
    V = outer.vertices
    if V.shape[0] < 4:
        return Polygon2.empty()
    prev, nxt = np.roll(V, 1, axis=0), np.roll(V, -1, axis=0)
    d = nxt - prev
    normals = np.stack([d[:, 1], -d[:, 0]], axis=1)
    normals /= np.linalg.norm(normals, axis=1, keepdims=True)
    offsets = np.einsum("ij,ij->i", normals, prev)
    inner, unbounded = intersect_halfplanes(normals, offsets)
    return Polygon2.empty() if unbounded else inner


def body_from_support(field: SupportField) -> BodyEstimate:
    """Sandwich a planar body between an inner polygon and the support polygon.

    With touch points the inner polygon is their hull.  Without them it is the
    chord-cut region of :func:`guaranteed_inner`.  Either way the gap is the
    exact Hausdorff distance between the two polygons.
    """
    g = field.grid
    if g.dim != 2:
        raise DomainError("polygon reconstruction is planar only")
    if field.unbounded:
        return BodyEstimate(None, None, math.inf, field, unbounded=True)
    outer, unb = intersect_halfplanes(g.vectors, field.values)
    if unb:
        return BodyEstimate(None, None, math.inf, field, unbounded=True)
    if outer.is_empty:
        # tolerate rounding when the body is a point or a thin segment
        if field.touch is not None:
            outer = convex_hull(field.touch)
        else:
            raise DomainError("support values are inconsistent (empty body)")
    if field.touch is not None:
        inner = convex_hull(field.touch)
        gap = hausdorff(inner, outer)
        return BodyEstimate(inner, outer, gap, field)
    inner = guaranteed_inner(outer)
    gap = outer.diameter if inner.is_empty else hausdorff(inner, outer)
    return BodyEstimate(inner, outer, gap, field, notes={"touch": False, "N": g.size})


def aumann_integral(bodies: Iterable[tuple[float, SupportField]]) -> SupportField:
    """Weighted sum of support fields (and of their touch points)."""
    items = list(bodies)
    if not items:
        raise DomainError("Aumann integral of an empty family")
    grid = items[0][1].grid
    vals = np.zeros(grid.size)
    touch = np.zeros((grid.size, grid.dim))
    have_touch = True
    unbounded = False
    for w, f in items:
        if w < 0:
            raise DomainError("Aumann weights must be nonnegative")
        if f.grid is not grid and not np.allclose(f.grid.vectors, grid.vectors, atol=1e-14, rtol=0):
            raise DomainError("Aumann integral needs a shared direction grid")
        if w == 0:
            continue
        vals = vals + w * f.values
        unbounded = unbounded or f.unbounded
        if f.touch is None:
            have_touch = False
        else:
            touch = touch + w * f.touch
    return SupportField(grid, vals, touch if have_touch else None, unbounded)


# ---------------------------------------------------------------------------
# discrete average-quantile polytopes


def _greedy_fill(proj: np.ndarray, p: np.ndarray, alpha: float):
    """Greedy dual weights ``gamma_i p_i`` for each column of ``proj``.

    ``proj`` has shape (n, k).  Returns the mass matrix of shape (n, k) in the
    original atom order.
    """
    order = np.argsort(-proj, axis=0, kind="stable")
    cap = p[order] / alpha
    prev = np.cumsum(cap, axis=0) - cap
    mass_sorted = np.clip(1.0 - prev, 0.0, cap)
    mass = np.empty_like(mass_sorted)
    np.put_along_axis(mass, order, mass_sorted, axis=0)
    return mass


def greedy_witness(values, weights, alpha: float) -> np.ndarray:
    """Dual density ``gamma`` of the greedy top fill for one projected law."""
    v = np.asarray(values, dtype=float)
    p = np.asarray(weights, dtype=float)
    mass = _greedy_fill(v[:, None], p, alpha)[:, 0]
    return mass / p


def support_touchpoint(mu: WeightedSample, alpha: float, u):
    """Support value and boundary point of the average-quantile body.

    The boundary point is ``sum gamma_i p_i x_i`` for the greedy maximiser of
    the dual problem in direction ``u``.
    """
    if not (0.0 < alpha <= 1.0):
        raise DomainError("alpha must lie in (0, 1]")
    u = np.asarray(u, dtype=float)
    proj = mu.points @ u
    mass = _greedy_fill(proj[:, None], mu.weights, alpha)[:, 0]
    x = mass @ mu.points
    return float(mass @ proj), x


def support_touchpoints(mu: WeightedSample, alpha: float, U: np.ndarray, chunk: int = 2048):
    """Vectorised :func:`support_touchpoint` over the rows of ``U``."""
    U = np.asarray(U, dtype=float)
    h = np.empty(U.shape[0])
    X = np.empty((U.shape[0], mu.dim))
    step = max(1, int(chunk * 64 // max(mu.size, 1)))
    for s in range(0, U.shape[0], step):
        proj = mu.points @ U[s:s + step].T
        mass = _greedy_fill(proj, mu.weights, alpha)
        h[s:s + step] = (mass * proj).sum(axis=0)
        X[s:s + step] = mass.T @ mu.points
    return h, X


def critical_angles(points: np.ndarray) -> np.ndarray:
    """Sorted angles in [0, 2pi) at which two atoms project to equal values."""
    P = np.asarray(points, dtype=float)
    i, j = np.triu_indices(P.shape[0], 1)
    D = P[j] - P[i]
    ok = np.linalg.norm(D, axis=1) > 0
    D = D[ok]
    base = np.arctan2(D[:, 1], D[:, 0]) + np.pi / 2
    ang = np.mod(np.concatenate([base, base + np.pi]), 2 * np.pi)
    return np.unique(ang)


def exact_avg_quantile_body(mu: WeightedSample, alpha: float) -> Polygon2:
    """Exact average-quantile polygon of a planar discrete measure.

    Inside each angular cell between consecutive critical angles the order of
    the projections, hence the greedy witness, is constant; the witness point
    of every cell is a candidate vertex and the hull of the candidates is the
    exact body.
    """
    if mu.dim != 2:
        raise DomainError("exact sweep is planar only")
    if not (0.0 < alpha <= 1.0):
        raise DomainError("alpha must lie in (0, 1]")
    if alpha == 1.0 or mu.size == 1:
        return Polygon2(mu.mean[None, :])
    ang = critical_angles(mu.points)
    if ang.size == 0:
        return Polygon2(mu.mean[None, :])
    nxt = np.concatenate([ang[1:], [ang[0] + 2 * np.pi]])
    mid = (ang + nxt) / 2
    U = np.stack([np.cos(mid), np.sin(mid)], axis=1)
    _, X = support_touchpoints(mu, alpha, U)
    return convex_hull(X)
