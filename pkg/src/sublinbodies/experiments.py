"""Numerical experiments: concentration of empirical average-quantile bodies,
expected random polytopes, non-monotonicity, the Minkowski-sum conjecture and
maximum-extension fingerprints.  Each returns a :class:`~sublinbodies.verify.Report`
plus the polygons needed for a figure."""

from __future__ import annotations

import math

import numpy as np

from .distributions import EmpiricalLaw
from .geometry import DirectionGrid, Polygon2, minkowski_sum
from .risk import AvgQuantile, MaxExt, Mean, avg_quantile, avg_quantiles, evaluate
from .shapes import BoxShape, ConvexShape, L1BallShape, PolygonShape, make_rng, random_polygon
from .transforms import expected_polytope, floating_like_body, max_extension_spectral_family
from .verify import Check, Report, check_le

# ---------------------------------------------------------------------------
# concentration


def top_average(proj: np.ndarray, alpha: float) -> np.ndarray:
    """Column-wise ``e_alpha`` of equally weighted samples (rows are samples)."""
    n = proj.shape[0]
    w = alpha * n
    k = int(math.floor(w + 1e-9))
    frac = w - k
    if k >= n:
        return proj.mean(axis=0)
    part = np.partition(proj, n - k - 1, axis=0)
    top = part[n - k:].sum(axis=0) if k > 0 else 0.0
    nxt = part[n - k - 1]
    return (top + frac * nxt) / w


def concentration_bound(alpha: float, eps: float, r: float, R: float, n: int, d: int = 2) -> float:
    """``1 - 6^{d+1} (1 + 1/eps)^d exp(-alpha eps^2 r^2 n / (44 R^2))``."""
    return 1.0 - 6.0 ** (d + 1) * (1.0 + 1.0 / eps) ** d * math.exp(-alpha * eps**2 * r**2 * n / (44.0 * R**2))


def _uniform_square_sampler(half: float):
    return lambda rng, n: rng.uniform(-half, half, (n, 2))


def experiment_concentration(seed: int = 0, alpha: float = 0.3, eps: float = 0.5, n: int = 100_000,
                             seeds: int = 200, n_grid=(100, 1000, 10_000), decay_seeds: int = 50,
                             directions: int = 90, half: float = 1.0, chunk: int = 20_000) -> tuple:
    """Sandwich frequency of ``E_alpha(hat mu_n)`` and Hausdorff decay in ``n``.

    The sandwich ``(1-eps) E <= hat E <= (1+eps) E`` (about the origin) and
    the Hausdorff distance are evaluated through support functions on an
    equiangular grid of ``directions`` directions.
    """
    K = BoxShape([0.0, 0.0], [half, half])
    grid = DirectionGrid.uniform(directions)
    U = grid.vectors
    h = np.array([avg_quantile(K.projection_law(u), alpha) for u in U])
    r = float(h.min())
    R = K.diameter
    draw = _uniform_square_sampler(half)
    children = np.random.SeedSequence(int(seed)).spawn(2)
    rep = Report("concentration", seed=seed, params={
        "shape": K.to_json(), "alpha": alpha, "eps": eps, "n": n, "seeds": seeds,
        "n_grid": list(n_grid), "decay_seeds": decay_seeds, "directions": directions})

    def support_hat(rng, size):
        proj = np.concatenate([draw(rng, min(chunk, size - s)) @ U.T for s in range(0, size, chunk)])
        return top_average(proj, alpha)

    hits = 0
    for ss in children[0].spawn(seeds):
        hh = support_hat(np.random.Generator(np.random.Philox(ss)), n)
        hits += bool(np.all(hh >= (1 - eps) * h) and np.all(hh <= (1 + eps) * h))
    freq = hits / seeds
    bound = concentration_bound(alpha, eps, r, R, n)
    rep.add(Check("concentration.frequency_vs_bound", freq >= bound or bound <= 0, freq, bound))
    medians = []
    decay_children = children[1].spawn(len(n_grid))
    for nn, ss in zip(n_grid, decay_children):
        d = [float(np.max(np.abs(support_hat(np.random.Generator(np.random.Philox(s)), nn) - h)))
             for s in ss.spawn(decay_seeds)]
        medians.append(float(np.median(d)))
    rise = max(medians[i + 1] - medians[i] for i in range(len(medians) - 1)) if len(medians) > 1 else -1.0
    rep.add(Check("concentration.median_hausdorff_decreasing", rise < 0, rise, 0.0))
    rep.results = {"frequency": freq, "bound": bound, "r": r, "R": R,
                   "median_hausdorff": dict(zip([str(x) for x in n_grid], medians))}
    E = floating_like_body(K, AvgQuantile(alpha), grid).body
    sample = support_hat(np.random.Generator(np.random.Philox(children[1])), n_grid[0])
    from .geometry import intersect_halfplanes

    Ehat, _ = intersect_halfplanes(U, sample)
    figure = [("square", K.as_polygon(), "#888888"), (f"E_{alpha:g}", E, "#1f77b4"),
              (f"(1-eps) E", E.scaled(1 - eps), "#2ca02c"), (f"(1+eps) E", E.scaled(1 + eps), "#2ca02c"),
              (f"empirical n={n_grid[0]}", Ehat, "#d62728")]
    return rep, figure


# ---------------------------------------------------------------------------
# expected polytope


def experiment_expected_polytope(seed: int = 0, ms=(2, 3, 5), trials: int = 100_000, directions: int = 16,
                                 sigmas: float = 3.0, shape: ConvexShape | None = None) -> tuple:
    """``h(E P_m, u)`` from the Aumann integral against Monte Carlo means of
    ``max_i <xi_i, u>`` over ``m`` uniform points."""
    K = BoxShape([0.0, 0.0], [1.0, 1.0]) if shape is None else shape
    grid = DirectionGrid.uniform(directions)
    U = grid.vectors
    rng = make_rng(seed)
    rep = Report("expected-polytope", seed=seed, params={
        "shape": K.to_json(), "ms": list(ms), "trials": trials, "directions": directions, "sigmas": sigmas})
    figure = [("shape", K.as_polygon(), "#888888")]
    colors = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd"]
    for i, m in enumerate(ms):
        est = expected_polytope(K, m, grid)
        spec_vals = est.field.values
        closed = np.array([evaluate(MaxExt(Mean(), m), K.projection_law(u)) for u in U])
        pts = K.sample(trials * m, rng).reshape(trials, m, K.dim)
        hmax = np.max(pts @ U.T, axis=1)
        mc = hmax.mean(axis=0)
        se = hmax.std(axis=0, ddof=1) / math.sqrt(trials)
        z = np.abs(mc - spec_vals) / se
        rep.add(check_le(f"expected_polytope.m={m}.max_z", float(z.max()), sigmas))
        rep.add(check_le(f"expected_polytope.m={m}.aumann_vs_max_extension", float(np.max(np.abs(closed - spec_vals))), 1e-8))
        rep.results[f"m={m}"] = {"spectral": spec_vals.tolist(), "mc": mc.tolist(), "std_error": se.tolist(),
                                 "nodes": est.notes.get("nodes")}
        figure.append((f"E P_{m}", est.body, colors[i % len(colors)]))
    return rep, figure


# ---------------------------------------------------------------------------
# non-monotonicity


def experiment_nonmonotone(seed: int = 0, a: float = 0.8, eps: float = 0.1, alpha: float = 0.5,
                           grid: int = 720) -> tuple:
    """Box ``[-a,a] x [-eps,eps]`` inside the l1 ball, compared along (1, 0)."""
    if not (0 < a and 0 < eps and a + eps <= 1):
        raise ValueError("need a, eps > 0 with a + eps <= 1")
    K = L1BallShape([0.0, 0.0], 1.0)
    L = BoxShape([0.0, 0.0], [a, eps])
    u = np.array([1.0, 0.0])
    hK = avg_quantile(K.projection_law(u), alpha)
    hL = avg_quantile(L.projection_law(u), alpha)
    rep = Report("nonmonotone", seed=seed, params={"a": a, "eps": eps, "alpha": alpha, "grid": grid})
    if alpha <= 0.5:
        rep.add(check_le("nonmonotone.l1_closed_form", abs(hK - (1 - 2 * math.sqrt(2) * math.sqrt(alpha) / 3)), 1e-9))
        rep.add(check_le("nonmonotone.box_closed_form", abs(hL - a * (1 - alpha)), 1e-12))
    verdict = hL > hK
    rep.add(Check("nonmonotone.box_exceeds_l1", verdict, hL - hK, 0.0))
    # after normalising by volume the transform is monotone
    g = DirectionGrid.uniform(64)
    VL, VK = L.volume, K.volume
    laws_L = [L.projection_law(v) for v in g.vectors]
    laws_K = [K.projection_law(v) for v in g.vectors]
    worst = -math.inf
    for t in np.linspace(0.1, 1.0, 10) * VL:
        hl = np.array([avg_quantile(law, t / VL) for law in laws_L])
        hk = np.array([avg_quantile(law, t / VK) for law in laws_K])
        worst = max(worst, float(np.max(hl - hk)))
    rep.add(check_le("nonmonotone.normalised_monotone", worst, 1e-12))
    rep.results = {"h_l1": hK, "h_box": hL, "direction": u.tolist(),
                   "verdict": "non-monotone confirmed" if verdict else "no violation"}
    EK = floating_like_body(K, AvgQuantile(alpha), grid).body
    EL = floating_like_body(L, AvgQuantile(alpha), grid).body
    figure = [("l1 ball K", K.as_polygon(), "#888888"), ("box L", L.as_polygon(), "#bbbbbb"),
              (f"E_{alpha:g}(K)", EK, "#1f77b4"), (f"E_{alpha:g}(L)", EL, "#d62728")]
    return rep, figure


# ---------------------------------------------------------------------------
# Minkowski-sum conjecture


def experiment_minkowski(seed: int = 0, alpha: float = 0.3, pairs: int = 10, grid: int = 360,
                         tol: float = 1e-9) -> tuple:
    """Looks for directions with ``h(E(K+L)) > h(E K) + h(E L)``.  Reports only."""
    rng = make_rng(seed)
    g = DirectionGrid.uniform(grid)
    rep = Report("minkowski-conjecture", seed=seed, params={"alpha": alpha, "pairs": pairs, "grid": grid, "tol": tol})
    worst = []
    violations = []
    figure = []
    for i in range(pairs):
        K = random_polygon(rng, int(rng.integers(3, 9)))
        L = random_polygon(rng, int(rng.integers(3, 9)))
        S = PolygonShape(minkowski_sum(K.as_polygon(), L.as_polygon()).vertices)
        f = lambda P: np.array([avg_quantile(P.projection_law(u), alpha) for u in g.vectors])
        diff = f(S) - f(K) - f(L)
        j = int(np.argmax(diff))
        worst.append(float(diff[j]))
        if diff[j] > tol:
            violations.append({"pair": i, "excess": float(diff[j]), "angle": float(g.angles[j])})
        if i == 0:
            EK = floating_like_body(K, AvgQuantile(alpha), g).body
            EL = floating_like_body(L, AvgQuantile(alpha), g).body
            ES = floating_like_body(S, AvgQuantile(alpha), g).body
            figure = [("K+L", S.as_polygon(), "#888888"), ("E(K)+E(L)", minkowski_sum(EK, EL), "#1f77b4"),
                      ("E(K+L)", ES, "#d62728")]
    rep.results = {"max_excess_per_pair": worst, "violations": violations,
                   "verdict": "violation found" if violations else "no violation found"}
    return rep, figure


# ---------------------------------------------------------------------------
# fingerprints


def fingerprint_pair(seed: int):
    """Two random empirical laws with the same mean."""
    rng = make_rng(seed)
    a = rng.normal(0.0, 1.0, int(rng.integers(3, 8)))
    b = rng.normal(0.0, 1.0, int(rng.integers(3, 8)))
    return EmpiricalLaw(a - a.mean()), EmpiricalLaw(b - b.mean())


def experiment_fingerprint(seed: int = 0, m_max: int = 8, cs=(0.0, 0.5, 1.0), laws=None) -> tuple:
    A, B = fingerprint_pair(seed) if laws is None else laws
    rep = Report("fingerprint", seed=seed, params={"m_max": m_max, "cs": list(cs)})
    table = {}
    for c in cs:
        fa = [max_extension_spectral_family(A, c, m) for m in range(1, m_max + 1)]
        fb = [max_extension_spectral_family(B, c, m) for m in range(1, m_max + 1)]
        table[f"{c:g}"] = {"A": fa, "B": fb}
    diff = max(abs(x - y) for v in table.values() for x, y in zip(v["A"], v["B"]))
    rep.add(check_le("fingerprint.equal_means", abs(A.mean - B.mean), 1e-12))
    rep.add(Check("fingerprint.distinguished", diff > 1e-9, diff, 1e-9))
    rep.results = {"law_A": A.values.tolist(), "law_B": B.values.tolist(), "table": table}
    figure = []
    for c, col in zip(table, ["#1f77b4", "#d62728", "#2ca02c"]):
        for key, dash in (("A", False), ("B", True)):
            pts = np.array([[m, v] for m, v in enumerate(table[c][key], start=1)])
            figure.append((f"c={c} law {key}", ("polyline", pts, dash), col))
    return rep, figure


EXPERIMENTS = {
    "concentration": experiment_concentration,
    "expected-polytope": experiment_expected_polytope,
    "nonmonotone": experiment_nonmonotone,
    "minkowski-conjecture": experiment_minkowski,
    "fingerprint": experiment_fingerprint,
}


__all__ = [
    "top_average", "concentration_bound", "experiment_concentration", "experiment_expected_polytope",
    "experiment_nonmonotone", "experiment_minkowski", "experiment_fingerprint", "fingerprint_pair",
    "EXPERIMENTS",
]
