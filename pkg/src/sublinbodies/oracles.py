"""Independent verifiers: a dense simplex solver for the dual problems of
empirical laws and Monte Carlo estimators of support values."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .distributions import DomainError, EmpiricalLaw
from .geometry import greedy_witness
from .risk import AvgQuantile, ExpectationSpec, evaluate
from .shapes import ConvexShape, make_rng

_TOL = 1e-11


class InfeasibleError(RuntimeError):
    pass


class UnboundedError(RuntimeError):
    pass


@dataclass
class LinearProgram:
    """``max (or min) c.x`` s.t. ``A_ub x <= b_ub``, ``A_eq x = b_eq``, ``lb <= x <= ub``."""

    c: np.ndarray
    A_ub: np.ndarray | None = None
    b_ub: np.ndarray | None = None
    A_eq: np.ndarray | None = None
    b_eq: np.ndarray | None = None
    lb: np.ndarray | None = None
    ub: np.ndarray | None = None
    maximize: bool = True

    def __post_init__(self):
        self.c = np.asarray(self.c, dtype=float).ravel()
        n = self.c.size
        def mat(A, b):
            if A is None:
                return np.zeros((0, n)), np.zeros(0)
            A = np.atleast_2d(np.asarray(A, dtype=float))
            b = np.asarray(b, dtype=float).ravel()
            if A.shape != (b.size, n):
                raise DomainError("constraint matrix and right-hand side disagree")
            return A, b
        self.A_ub, self.b_ub = mat(self.A_ub, self.b_ub)
        self.A_eq, self.b_eq = mat(self.A_eq, self.b_eq)
        self.lb = np.zeros(n) if self.lb is None else np.asarray(self.lb, dtype=float).ravel()
        self.ub = np.full(n, np.inf) if self.ub is None else np.asarray(self.ub, dtype=float).ravel()
        if self.lb.size != n or self.ub.size != n:
            raise DomainError("bounds must match the number of variables")
        if not np.all(np.isfinite(self.lb)):
            raise DomainError("lower bounds must be finite")


def _pivot(T: np.ndarray, r: int, j: int) -> None:
    T[r] /= T[r, j]
    col = T[:, j].copy()
    col[r] = 0.0
    T -= np.outer(col, T[r])


def _run_simplex(T: np.ndarray, basis: list, cost: np.ndarray, max_iter: int = 50000) -> None:
    """Maximise ``cost . x`` on a canonical tableau ``T = [A | b]`` with Bland's rule."""
    m = T.shape[0]
    for _ in range(max_iter):
        cb = cost[basis]
        reduced = cost - cb @ T[:, :-1]
        reduced[basis] = 0.0
        cand = np.nonzero(reduced > _TOL)[0]
        if cand.size == 0:
            return
        j = int(cand[0])
        colj = T[:, j]
        pos = colj > _TOL
        if not pos.any():
            raise UnboundedError("objective is unbounded")
        ratios = np.full(m, np.inf)
        ratios[pos] = T[pos, -1] / colj[pos]
        best = ratios.min()
        ties = np.nonzero(ratios <= best + _TOL * max(1.0, abs(best)))[0]
        r = int(min(ties, key=lambda i: basis[i]))
        _pivot(T, r, j)
        basis[r] = j
    raise RuntimeError("simplex iteration limit reached")


def lp_solve(prog: LinearProgram):
    """Two-phase dense simplex.  Returns ``(value, x)``."""
    n = prog.c.size
    lb, ub = prog.lb, prog.ub
    # shift to y = x - lb >= 0 and add finite upper bounds as rows
    A_ub, b_ub = prog.A_ub, prog.b_ub - prog.A_ub @ lb
    fin = np.nonzero(np.isfinite(ub))[0]
    if fin.size:
        extra = np.zeros((fin.size, n))
        extra[np.arange(fin.size), fin] = 1.0
        A_ub = np.vstack([A_ub, extra])
        b_ub = np.concatenate([b_ub, ub[fin] - lb[fin]])
    A_eq, b_eq = prog.A_eq, prog.b_eq - prog.A_eq @ lb
    mu, me = A_ub.shape[0], A_eq.shape[0]
    m = mu + me
    if m == 0:
        if np.any((prog.c > 0) if prog.maximize else (prog.c < 0)):
            raise UnboundedError("objective is unbounded")
        return float(prog.c @ lb), lb.copy()
    # columns: y (n), slacks (mu), artificials (m)
    A = np.zeros((m, n + mu))
    A[:mu, :n] = A_ub
    A[:mu, n:] = np.eye(mu)
    A[mu:, :n] = A_eq
    b = np.concatenate([b_ub, b_eq])
    neg = b < 0
    A[neg] *= -1
    b[neg] *= -1
    T = np.hstack([A, np.eye(m), b[:, None]])
    nv = n + mu
    basis = list(range(nv, nv + m))
    cost1 = np.concatenate([np.zeros(nv), -np.ones(m)])
    _run_simplex(T, basis, cost1)
    if T[:, -1] @ (np.array(basis) >= nv) > 1e-9 * max(1.0, np.abs(b).max()):
        raise InfeasibleError("constraints are infeasible")
    # drive artificials out of the basis, dropping redundant rows
    keep_rows = []
    for r in range(m):
        if basis[r] >= nv:
            cand = np.nonzero(np.abs(T[r, :nv]) > 1e-9)[0]
            if cand.size == 0:
                continue
            _pivot(T, r, int(cand[0]))
            basis[r] = int(cand[0])
        keep_rows.append(r)
    T = np.hstack([T[keep_rows, :nv], T[keep_rows, -1:]])
    basis = [basis[r] for r in keep_rows]
    sign = 1.0 if prog.maximize else -1.0
    cost2 = np.concatenate([sign * prog.c, np.zeros(mu)])
    _run_simplex(T, basis, cost2)
    y = np.zeros(nv)
    y[basis] = T[:, -1]
    x = y[:n] + lb
    return float(prog.c @ x), x


# ---------------------------------------------------------------------------
# dual problems for empirical laws


@dataclass(frozen=True)
class DualWitness:
    """Dual density ``gamma`` on the atoms of an empirical law."""

    gamma: np.ndarray
    value: float

    def check(self, law: EmpiricalLaw, upper: float | None = None, tol: float = 1e-10) -> bool:
        g = np.asarray(self.gamma)
        ok = abs(float(g @ law.weights) - 1.0) <= tol and bool(np.all(g >= -tol))
        if upper is not None:
            ok = ok and bool(np.all(g <= upper + tol))
        return ok


def dual_avg_quantile(law: EmpiricalLaw, alpha: float):
    """LP value of ``max E(gamma b)`` over ``0 <= gamma <= 1/alpha, E gamma = 1``,
    together with the greedy witness."""
    if not (0.0 < alpha <= 1.0):
        raise DomainError("alpha must lie in (0, 1]")
    p, v = law.weights, law.values
    n = p.size
    prog = LinearProgram(p * v, A_eq=p[None, :], b_eq=[1.0], lb=np.zeros(n), ub=np.full(n, 1.0 / alpha))
    value, _ = lp_solve(prog)
    gamma = greedy_witness(v, p, alpha)
    return value, DualWitness(gamma, float(gamma @ (p * v)))


def dual_one_sided(law: EmpiricalLaw, a: float) -> float:
    """LP over ``gamma = 1 + a (zeta - E zeta)`` with ``0 <= zeta <= 1``."""
    if not (0.0 <= a <= 1.0):
        raise DomainError("a must lie in [0, 1]")
    p, v = law.weights, law.values
    m = float(p @ v)
    # E(gamma b) = m + a sum p_i zeta_i (v_i - m)
    prog = LinearProgram(a * p * (v - m), lb=np.zeros(p.size), ub=np.ones(p.size))
    value, _ = lp_solve(prog)
    return m + value


def dual_expectile(law: EmpiricalLaw, tau: float) -> float:
    """LP over ``gamma >= 0``, ``E gamma = 1``, ``s <= gamma_i <= s tau/(1-tau)``."""
    if not (0.5 <= tau < 1.0):
        raise DomainError("tau must lie in [1/2, 1)")
    p, v = law.weights, law.values
    n = p.size
    r = tau / (1 - tau)
    # variables: gamma_1..gamma_n, s
    c = np.concatenate([p * v, [0.0]])
    A1 = np.hstack([-np.eye(n), np.ones((n, 1))])       # s - gamma_i <= 0
    A2 = np.hstack([np.eye(n), -r * np.ones((n, 1))])   # gamma_i - r s <= 0
    prog = LinearProgram(c, A_ub=np.vstack([A1, A2]), b_ub=np.zeros(2 * n),
                         A_eq=np.concatenate([p, [0.0]])[None, :], b_eq=[1.0])
    value, _ = lp_solve(prog)
    return value


# ---------------------------------------------------------------------------
# Monte Carlo


@dataclass(frozen=True)
class McEstimate:
    value: float
    std_error: float
    n: int
    seed: int


def mc_support(shape: ConvexShape, spec: ExpectationSpec, u, n: int, seed: int,
               n_boot: int = 200) -> McEstimate:
    """Plug-in estimate of ``e(<xi, u>)`` from ``n`` uniform samples."""
    if n < 100:
        raise DomainError("Monte Carlo support needs n >= 100")
    ss = np.random.SeedSequence(int(seed))
    s_draw, s_boot = ss.spawn(2)
    rng = np.random.Generator(np.random.Philox(s_draw))
    u = np.asarray(u, dtype=float)
    u = u / np.linalg.norm(u)
    b = shape.sample(int(n), rng) @ u
    value = evaluate(spec, EmpiricalLaw(b))
    if isinstance(spec, AvgQuantile):
        alpha = spec.alpha
        q = np.quantile(b, 1 - alpha, method="inverted_cdf") if alpha < 1 else 0.0
        z = np.clip(b - q, 0, None) / alpha if alpha < 1 else b
        se = float(np.std(z, ddof=1) / np.sqrt(n))
    else:
        brng = np.random.Generator(np.random.Philox(s_boot))
        reps = np.empty(n_boot)
        for k in range(n_boot):
            reps[k] = evaluate(spec, EmpiricalLaw(b[brng.integers(0, n, n)]))
        se = float(np.std(reps, ddof=1))
    return McEstimate(float(value), se, int(n), int(seed))


__all__ = [
    "LinearProgram", "lp_solve", "InfeasibleError", "UnboundedError", "DualWitness",
    "dual_avg_quantile", "dual_one_sided", "dual_expectile", "McEstimate", "mc_support",
    "make_rng",
]
