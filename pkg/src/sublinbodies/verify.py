"""Verification suites.

Each suite returns a :class:`Report` listing named checks with the achieved
error, the tolerance and a pass flag.  Suites are deterministic given the
seed.  Inclusion statements between bodies are checked on the support values
at the grid directions, where every polygon involved has its edge normals, so
no discretisation slack enters those comparisons.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .distributions import EmpiricalLaw, PiecewiseLinearLaw, WeightedSample, max_law, uniform_law
from .geometry import (
    DirectionGrid,
    Polygon2,
    body_from_support,
    circumscription_gap,
    containment_excess,
    exact_avg_quantile_body,
    hausdorff,
    intersect_halfplanes,
    support_touchpoints,
)
from .oracles import dual_avg_quantile, dual_expectile, dual_one_sided
from .risk import (
    AvgQuantile,
    DensityPiece,
    EssSup,
    Expectile,
    ExpectationSpec,
    MaxExt,
    Mean,
    OneSidedMoment,
    Spectral,
    SpectralMeasure,
    avg_quantile,
    avg_quantiles,
    evaluate,
    expectile,
    max_ext_avg_quantile_direct,
    one_sided_moment,
)
from .shapes import (
    BallShape,
    BoxShape,
    ConvexShape,
    PolygonShape,
    make_rng,
    polygon_view,
    random_polygon,
    regular_polygon,
)
from .transforms import (
    centroid_body,
    centroid_via_ulam,
    classical_centroid_body,
    depth_region,
    floating_like_body,
    integrated_depth,
    support_field,
)
from .transforms import _quantile_offsets

# ---------------------------------------------------------------------------
# reports


def _num(x):
    if x is None:
        return None
    x = float(x)
    if math.isfinite(x):
        return x
    return "nan" if math.isnan(x) else ("inf" if x > 0 else "-inf")


@dataclass
class Check:
    name: str
    passed: bool
    value: float
    tolerance: float

    def to_json(self) -> dict:
        return {"name": self.name, "pass": bool(self.passed), "value": _num(self.value),
                "tolerance": _num(self.tolerance)}


def check_le(name: str, value: float, tol: float) -> Check:
    return Check(name, bool(value <= tol), float(value), float(tol))


@dataclass
class Report:
    suite: str
    checks: list = field(default_factory=list)
    seed: int = 0
    params: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        out = {
            "suite": self.suite,
            "checks": [c.to_json() for c in sorted(self.checks, key=lambda c: c.name)],
            "seed": self.seed,
            "params": self.params,
            "pass": self.passed,
        }
        if self.results:
            out["results"] = self.results
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


# ---------------------------------------------------------------------------
# random inputs


def random_empirical(rng: np.random.Generator, max_atoms: int = 12, weighted: bool = True) -> EmpiricalLaw:
    n = int(rng.integers(1, max_atoms + 1))
    v = rng.normal(0.0, 2.0, n)
    w = rng.uniform(0.1, 1.0, n) if weighted else np.ones(n)
    return EmpiricalLaw(v, w / w.sum())


def random_sample(rng: np.random.Generator, n_max: int = 40, weighted: bool = True,
                  dim: int = 2, n_min: int = 3) -> WeightedSample:
    n = int(rng.integers(n_min, n_max + 1))
    pts = rng.normal(0.0, 1.0, (n, dim)) * rng.uniform(0.5, 2.0, dim)
    if not weighted:
        return WeightedSample(pts)
    w = rng.uniform(0.1, 1.0, n)
    return WeightedSample(pts, w / w.sum())


def random_measure(rng: np.random.Generator) -> SpectralMeasure:
    """Random spectral measure: up to two atoms plus one polynomial piece."""
    k = int(rng.integers(0, 3))
    locs = rng.uniform(0.05, 1.0, k)
    masses = rng.uniform(0.1, 1.0, k + 1)
    masses /= masses.sum()
    lo = float(rng.uniform(0.0, 0.5))
    hi = float(rng.uniform(lo + 0.1, 1.0))
    coeffs = rng.uniform(0.0, 1.0, int(rng.integers(1, 4)))
    piece = DensityPiece(lo, hi, tuple(coeffs))
    scale = masses[-1] / piece.int_g(0.0, 1.0)
    piece = DensityPiece(lo, hi, tuple(coeffs * scale))
    return SpectralMeasure(atoms=tuple(zip(locs, masses[:-1])), pieces=(piece,))


SPEC_KINDS = ("mean", "avg_quantile", "spectral", "one_sided", "expectile", "max_ext", "ess_sup")


def random_spec(rng: np.random.Generator, kind: str) -> ExpectationSpec:
    if kind == "mean":
        return Mean()
    if kind == "avg_quantile":
        return AvgQuantile(float(rng.uniform(0.01, 1.0)))
    if kind == "spectral":
        return Spectral(random_measure(rng))
    if kind == "one_sided":
        return OneSidedMoment(float(rng.uniform(1.0, 3.0)), float(rng.uniform(0.0, 1.0)))
    if kind == "expectile":
        return Expectile(float(rng.uniform(0.5, 0.99)))
    if kind == "max_ext":
        base = random_spec(rng, SPEC_KINDS[int(rng.integers(0, 5))])
        return MaxExt(base, int(rng.integers(1, 6)))
    if kind == "ess_sup":
        return EssSup()
    raise ValueError(f"unknown spec kind {kind!r}")


def grid_support_excess(h_small: np.ndarray, h_big: np.ndarray) -> float:
    """``max_j h_small(u_j) - h_big(u_j)``; nonpositive when the inclusion holds
    on the grid.  ``-inf`` support marks an empty set."""
    a, b = np.asarray(h_small, dtype=float), np.asarray(h_big, dtype=float)
    if np.all(a == -np.inf):
        return -math.inf
    if np.all(b == -np.inf):
        return math.inf
    return float(np.max(a - b))


def _poly_support(P: Polygon2, grid: DirectionGrid) -> np.ndarray:
    if P.is_empty:
        return np.full(grid.size, -np.inf)
    return np.asarray(P.support(grid.vectors), dtype=float)


# ---------------------------------------------------------------------------
# duals


def suite_duals(seed: int = 0, n_laws: int = 200, tol: float = 1e-7, max_atoms: int = 12) -> Report:
    """LP values of the dual problems against direct evaluation."""
    rng = make_rng(seed)
    rep = Report("duals", seed=seed, params={"n_laws": n_laws, "tol": tol, "max_atoms": max_atoms})
    err = {"avg_quantile": 0.0, "one_sided": 0.0, "expectile": 0.0, "greedy_witness": 0.0}
    feasible = True
    for _ in range(n_laws):
        law = random_empirical(rng, max_atoms)
        alpha = float(rng.uniform(0.01, 1.0))
        a = float(rng.uniform(0.0, 1.0))
        tau = float(rng.uniform(0.5, 0.99))
        lp, wit = dual_avg_quantile(law, alpha)
        direct = avg_quantile(law, alpha)
        err["avg_quantile"] = max(err["avg_quantile"], abs(lp - direct))
        err["greedy_witness"] = max(err["greedy_witness"], abs(wit.value - direct))
        feasible &= wit.check(law, upper=1.0 / alpha)
        err["one_sided"] = max(err["one_sided"], abs(dual_one_sided(law, a) - one_sided_moment(law, 1.0, a)))
        err["expectile"] = max(err["expectile"], abs(dual_expectile(law, tau) - expectile(law, tau)))
    for k, v in err.items():
        rep.add(check_le(f"dual.{k}", v, tol))
    rep.add(Check("dual.witness_feasible", feasible, 0.0 if feasible else 1.0, 0.0))
    return rep


# ---------------------------------------------------------------------------
# axioms


def suite_axioms(seed: int = 0, trials: int = 1000, tol: float = 1e-10) -> Report:
    """Monotonicity, translation, homogeneity and subadditivity on coupled laws."""
    rng = make_rng(seed)
    rep = Report("axioms", seed=seed, params={"trials": trials, "tol": tol})
    worst = {(k, ax): -math.inf for k in SPEC_KINDS for ax in ("monotone", "translation", "homogeneity", "subadditive")}
    for i in range(trials):
        kind = SPEC_KINDS[i % len(SPEC_KINDS)]
        spec = random_spec(rng, kind)
        n = int(rng.integers(1, 13))
        w = rng.uniform(0.1, 1.0, n)
        w /= w.sum()
        b = rng.normal(0.0, 2.0, n)
        eta = rng.normal(0.0, 2.0, n)
        bump = np.abs(rng.normal(0.0, 1.0, n))
        c = float(rng.normal(0.0, 3.0))
        lam = float(rng.uniform(0.1, 5.0))
        e = lambda v: evaluate(spec, EmpiricalLaw(v, w))
        eb = e(b)
        scale = max(1.0, float(np.max(np.abs(b))), float(np.max(np.abs(eta))))
        r = {
            "monotone": eb - e(b + bump),
            "translation": abs(e(b + c) - eb - c),
            "homogeneity": abs(e(lam * b) - lam * eb),
            "subadditive": e(b + eta) - eb - e(eta),
        }
        for ax, v in r.items():
            worst[(kind, ax)] = max(worst[(kind, ax)], v / scale)
    for (kind, ax), v in worst.items():
        if v > -math.inf:
            rep.add(check_le(f"axiom.{ax}.{kind}", v, tol))
    return rep


# ---------------------------------------------------------------------------
# exact average-quantile polytope against the generic sandwich


def suite_sandwich(seed: int = 0, n_measures: int = 50, N: int = 4096, max_atoms: int = 40,
                   rel_gap: float = 1e-3) -> Report:
    rng = make_rng(seed)
    grid = DirectionGrid.uniform(N)
    rep = Report("sandwich", seed=seed, params={"n_measures": n_measures, "N": N, "max_atoms": max_atoms})
    worst_fit, worst_gap, worst_incl = -math.inf, 0.0, -math.inf
    for _ in range(n_measures):
        mu = random_sample(rng, max_atoms, weighted=bool(rng.integers(0, 2)))
        alpha = float(rng.uniform(0.05, 1.0))
        exact = exact_avg_quantile_body(mu, alpha)
        est = body_from_support(support_field(mu, AvgQuantile(alpha), grid))
        diam = max(exact.diameter, 1e-12)
        worst_fit = max(worst_fit, hausdorff(exact, est.body) - est.gap)
        worst_gap = max(worst_gap, est.gap / diam)
        worst_incl = max(worst_incl, containment_excess(exact, est.inner), containment_excess(est.outer, exact))
    rep.add(check_le("sandwich.hausdorff_minus_gap", worst_fit, 1e-10))
    rep.add(check_le("sandwich.relative_gap", worst_gap, rel_gap))
    rep.add(check_le("sandwich.inner_exact_outer", worst_incl, 1e-9))
    return rep


# ---------------------------------------------------------------------------
# inclusion chains


def suite_inclusion(seed: int = 0, n_measures: int = 50, alphas=(0.2, 0.5), n_polygons: int = 20,
                    polygon_alphas=(0.1, 0.2, 0.3, 0.4, 0.5), grid: int = 720, max_atoms: int = 40,
                    slack: float = 1e-6) -> Report:
    """Depth regions, their integral and the average-quantile body.

    Discrete measures: ``D_alpha <= (1/alpha) int_0^alpha D_t dt <= E_alpha``.
    Uniform laws on polygons: ``D_{(e-1) alpha / e} <= E_alpha <= D_{alpha / e}``.
    """
    rng = make_rng(seed)
    g = DirectionGrid.uniform(grid)
    rep = Report("inclusion", seed=seed, params={
        "n_measures": n_measures, "alphas": list(alphas), "n_polygons": n_polygons,
        "polygon_alphas": list(polygon_alphas), "grid": grid, "slack": slack})
    w1 = {a: -math.inf for a in alphas}
    w2 = {a: -math.inf for a in alphas}
    nonempty = {a: 0 for a in alphas}
    for _ in range(n_measures):
        mu = random_sample(rng, max_atoms, weighted=False, n_min=5)
        for a in alphas:
            I = integrated_depth(mu, a, g)
            E = exact_avg_quantile_body(mu, a)
            D = depth_region(mu, a, g, warn=False)
            hI = I.field.values if I.field is not None else np.full(g.size, -np.inf)
            nonempty[a] += int(not D.is_empty)
            w1[a] = max(w1[a], grid_support_excess(_poly_support(D, g), hI))
            w2[a] = max(w2[a], grid_support_excess(hI, _poly_support(E, g)))
    for a in alphas:
        rep.add(check_le(f"chain14.depth_in_integral.alpha={a:g}", w1[a], slack))
        rep.add(check_le(f"chain14.integral_in_body.alpha={a:g}", w2[a], slack))
    rep.results["chain14_nonempty_depth_regions"] = {f"{a:g}": nonempty[a] for a in alphas}
    lo_c, hi_c = (math.e - 1) / math.e, 1 / math.e
    v1 = {a: -math.inf for a in polygon_alphas}
    v2 = {a: -math.inf for a in polygon_alphas}
    pa = np.asarray(polygon_alphas, dtype=float)
    levels = np.concatenate([1.0 - lo_c * pa, 1.0 - hi_c * pa])
    for _ in range(n_polygons):
        K = random_polygon(rng, int(rng.integers(3, 12)))
        laws = [K.projection_law(u) for u in g.vectors]
        hE = np.array([avg_quantiles(L, pa) for L in laws])          # (N, A)
        Q = np.array([L.quantile(levels) for L in laws])              # (N, 2A)
        for i, a in enumerate(polygon_alphas):
            D_lo, _ = intersect_halfplanes(g.vectors, Q[:, i])
            D_hi, _ = intersect_halfplanes(g.vectors, Q[:, pa.size + i])
            v1[a] = max(v1[a], grid_support_excess(_poly_support(D_lo, g), hE[:, i]))
            v2[a] = max(v2[a], grid_support_excess(hE[:, i], _poly_support(D_hi, g)))
    for a in polygon_alphas:
        rep.add(check_le(f"logconcave.lower_depth_in_body.alpha={a:g}", v1[a], slack))
        rep.add(check_le(f"logconcave.body_in_upper_depth.alpha={a:g}", v2[a], slack))
    return rep


# ---------------------------------------------------------------------------
# depth regions of symmetric bodies


def symmetric_test_shapes() -> dict:
    return {"square": polygon_view(BoxShape([0.0, 0.0], [1.0, 1.0])),
            "hexagon": regular_polygon(6, 1.0, phase=0.3)}


def suite_bob(seed: int = 0, N: int = 2048, deltas=(0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45),
              refine: int = 4, integral_alphas=(0.2, 0.4), integral_grid: int = 720,
              quad_tol: float = 1e-4) -> Report:
    """Depth regions of symmetric uniform laws have support ``q_{1-delta}``.

    On the grid the support of ``D_delta`` must equal the quantile offsets
    exactly, and the grid polygon must be within the circumscription gap of
    the body computed on a ``refine``-times finer grid.  The integrated depth
    body is compared with the average-quantile body as well.
    """
    rep = Report("bob", seed=seed, params={"N": N, "deltas": list(deltas), "refine": refine,
                                           "integral_alphas": list(integral_alphas), "quad_tol": quad_tol})
    g = DirectionGrid.uniform(N)
    gf = DirectionGrid.uniform(N * refine)
    levels = [1.0 - d for d in deltas]
    for name, K in symmetric_test_shapes().items():
        Q = _quantile_offsets(K, np.asarray(levels), gf)
        Qc = Q[::refine]
        diam = K.diameter
        for i, d in enumerate(deltas):
            D, _ = intersect_halfplanes(g.vectors, Qc[:, i])
            Df, _ = intersect_halfplanes(gf.vectors, Q[:, i])
            eq = float(np.max(np.abs(_poly_support(D, g) - Qc[:, i])))
            rep.add(check_le(f"bob.{name}.grid_equality.delta={d:g}", eq, 1e-9 * max(1.0, diam)))
            rep.add(check_le(f"bob.{name}.hausdorff.delta={d:g}", hausdorff(D, Df), circumscription_gap(diam, g)))
        gi = DirectionGrid.uniform(integral_grid)
        for a in integral_alphas:
            I = integrated_depth(K, a, gi)
            E = floating_like_body(K, AvgQuantile(a), gi)
            dist = hausdorff(I.body, E.body)
            rep.add(check_le(f"bob.{name}.integrated_depth.alpha={a:g}", dist, I.gap + E.gap + quad_tol))
    return rep


# ---------------------------------------------------------------------------
# zonoid-trimmed / metronoid form against the quantile form


def suite_metronoid(seed: int = 0, n_measures: int = 30, n_dirs: int = 32, tol: float = 1e-8,
                    max_atoms: int = 30) -> Report:
    rng = make_rng(seed)
    rep = Report("metronoid", seed=seed, params={"n_measures": n_measures, "n_dirs": n_dirs, "tol": tol})
    e_touch, e_lp, e_in = 0.0, 0.0, -math.inf
    for _ in range(n_measures):
        mu = random_sample(rng, max_atoms, weighted=True)
        alpha = float(rng.uniform(0.02, 1.0))
        th = rng.uniform(0, 2 * np.pi, n_dirs)
        U = np.stack([np.cos(th), np.sin(th)], axis=1)
        h, X = support_touchpoints(mu, alpha, U)
        P = exact_avg_quantile_body(mu, alpha)
        for j in range(n_dirs):
            law = EmpiricalLaw(mu.points @ U[j], mu.weights)
            q = avg_quantile(law, alpha)
            e_touch = max(e_touch, abs(float(X[j] @ U[j]) - q), abs(float(h[j]) - q))
            if j < 4:
                lp, _ = dual_avg_quantile(law, alpha)
                e_lp = max(e_lp, abs(lp - q))
        e_in = max(e_in, containment_excess(P, Polygon2(X) if len(X) < 3 else _hull(X)))
    rep.add(check_le("metronoid.touch_vs_quantile", e_touch, tol))
    rep.add(check_le("metronoid.lp_vs_quantile", e_lp, tol))
    rep.add(check_le("metronoid.touch_in_exact_body", e_in, tol))
    return rep


def _hull(X):
    from .geometry import convex_hull

    return convex_hull(X)


# ---------------------------------------------------------------------------
# centroid bodies


def suite_centroid(seed: int = 0, grid: int = 720, radius_tol: float = 1e-6, rel_tol: float = 5e-3) -> Report:
    rep = Report("centroid", seed=seed, params={"grid": grid, "radius_tol": radius_tol, "rel_tol": rel_tol})
    disk = BallShape([0.0, 0.0], 1.0)
    E = centroid_body(disk, 1.0, 1.0, grid)
    rep.add(check_le("centroid.disk_radius", float(np.max(np.abs(E.field.values - 2 / (3 * math.pi)))), radius_tol))
    shapes = {"disk": disk, "square": BoxShape([0.0, 0.0], [1.0, 1.0])}
    for name, K in shapes.items():
        A = centroid_via_ulam(K, grid=grid)
        B = classical_centroid_body(K, grid)
        dist = hausdorff(A.body, B.body)
        diam = 2.0 if name == "disk" else 2 * math.sqrt(2)
        rep.add(check_le(f"centroid.two_path.{name}", dist, A.gap + B.gap + 1e-12))
        rep.add(check_le(f"centroid.two_path_gaps.{name}", (A.gap + B.gap) / diam, rel_tol))
    # symmetric laws: e_{p,1} = 2^{-1/p} ||beta||_p, i.e. half the L^1 norm at p = 1
    sq = BoxShape([0.0, 0.0], [1.0, 1.0])
    g = DirectionGrid.uniform(16)
    for p in (1.0, 2.0):
        worst = 0.0
        for u in g.vectors:
            law = sq.projection_law(u)
            norm = _abs_moment(law, p) ** (1 / p)
            worst = max(worst, abs(evaluate(OneSidedMoment(p, 1.0), law) - 2 ** (-1 / p) * norm))
        rep.add(check_le(f"centroid.symmetric_norm.p={p:g}", worst, 1e-9))
    return rep


def _abs_moment(law, p: float) -> float:
    """``E|b|^p`` for a law with piecewise polynomial density, by Gauss-Legendre
    on the pieces (split at 0)."""
    cuts = sorted(set(np.asarray(law.knots, dtype=float).tolist()) | ({0.0} if law.lower < 0 < law.upper else set()))
    x, w = np.polynomial.legendre.leggauss(32)
    total = 0.0
    for a, b in zip(cuts[:-1], cuts[1:]):
        s_ = (a + b) / 2 + (b - a) / 2 * x
        total += (b - a) / 2 * float(w @ (np.abs(s_) ** p * law.pdf(s_)))
    return total


# ---------------------------------------------------------------------------
# continuity in the Hausdorff metric


CONTINUITY_SPECS = {
    "avg_quantile_0.3": AvgQuantile(0.3),
    "one_sided_2_1": OneSidedMoment(2.0, 1.0),
    "expectile_0.8": Expectile(0.8),
}


def perturbed_polygons(K: PolygonShape, ks, seed: int = 0):
    """``K_k``: vertices pushed outward radially by ``s_i 2^{-k}``, ``s_i`` in [0, 1]."""
    rng = make_rng(seed)
    V = K.vertices
    c = V.mean(axis=0)
    r = V - c
    r /= np.linalg.norm(r, axis=1, keepdims=True)
    s = rng.uniform(0.0, 1.0, V.shape[0])
    return [PolygonShape(V + (2.0 ** -k) * s[:, None] * r) for k in ks]


def suite_continuity(seed: int = 0, grid: int = 720, k_max: int = 10, final_tol: float = 1e-2,
                     specs: dict | None = None) -> Report:
    specs = CONTINUITY_SPECS if specs is None else specs
    ks = list(range(1, k_max + 1))
    K = regular_polygon(6, 1.0)
    Ks = perturbed_polygons(K, ks, seed)
    rep = Report("continuity", seed=seed, params={"grid": grid, "k_max": k_max, "final_tol": final_tol,
                                                  "specs": sorted(specs)})
    for name, spec in specs.items():
        base = floating_like_body(K, spec, grid).body
        d = [hausdorff(floating_like_body(Kk, spec, grid).body, base) for Kk in Ks]
        rep.results[name] = d
        rise = max(d[i + 1] - d[i] for i in range(len(d) - 1))
        rep.add(check_le(f"continuity.{name}.nonincreasing", rise, 0.0))
        rep.add(check_le(f"continuity.{name}.final", d[-1], final_tol))
    return rep


# ---------------------------------------------------------------------------
# maximum extensions


def suite_maxext(seed: int = 0, m_max: int = 10, n_laws: int = 50, tol_uniform: float = 1e-10,
                 tol_direct: float = 1e-9) -> Report:
    rng = make_rng(seed)
    rep = Report("maxext", seed=seed, params={"m_max": m_max, "n_laws": n_laws})
    U = uniform_law(0.0, 1.0)
    worst = max(abs(evaluate(MaxExt(Mean(), m), U) - m / (m + 1)) for m in range(1, m_max + 1))
    rep.add(check_le("maxext.uniform_mean", worst, tol_uniform))
    worst = 0.0
    for i in range(n_laws):
        if i % 2 == 0:
            law = random_empirical(rng, 12)
        else:
            k = int(rng.integers(2, 6))
            knots = np.sort(rng.uniform(-2, 2, k))
            knots = np.unique(np.round(knots, 6))
            if knots.size < 2:
                knots = np.array([-1.0, 1.0])
            law = PiecewiseLinearLaw(knots, rng.uniform(0.1, 1.0, knots.size), normalize=True)
        alpha = float(rng.uniform(0.05, 1.0))
        m = int(rng.integers(1, 8))
        worst = max(worst, abs(max_ext_avg_quantile_direct(law, alpha, m) - avg_quantile(max_law(law, m), alpha)))
    rep.add(check_le("maxext.direct_vs_max_law", worst, tol_direct))
    return rep


SUITES: dict[str, Callable[..., Report]] = {
    "duals": suite_duals,
    "axioms": suite_axioms,
    "inclusion": suite_inclusion,
    "bob": suite_bob,
    "metronoid": suite_metronoid,
    "centroid": suite_centroid,
    "continuity": suite_continuity,
    "sandwich": suite_sandwich,
    "maxext": suite_maxext,
}


def run_suite(name: str, seed: int = 0, **overrides) -> Report:
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](seed=seed, **overrides)


__all__ = [
    "Check", "Report", "check_le", "random_empirical", "random_sample", "random_measure", "random_spec",
    "SPEC_KINDS", "grid_support_excess", "suite_duals", "suite_axioms", "suite_sandwich", "suite_inclusion",
    "suite_bob", "suite_metronoid", "suite_centroid", "suite_continuity", "suite_maxext", "SUITES",
    "run_suite", "perturbed_polygons", "CONTINUITY_SPECS", "symmetric_test_shapes",
]
