"""Theta-number estimation via eigenvalue minimization over weighted adjacencies.

The estimate minimizes lambda_max(J - A) over symmetric matrices A supported
on the edges, which upper-bounds the independence number for every feasible
A. A one-dimensional scaling search realizes the same value as the interval
minimum of the walk-generating function for a fixed A; the optimizer vector
extraction turns that minimum into a certified point on the sphere
<1, v> = |v|^2 with <v, A v> = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import spectral, walkgen
from .graphs import Graph, strong_product
from .independent_set import independence_number

__all__ = [
    "WeightedAdjacency",
    "ThetaEstimate",
    "OptimizerVector",
    "lambda_max_penalized",
    "minimize_theta",
    "optimal_scaling",
    "extract_optimizer",
    "product_adjacency",
    "submultiplicativity_check",
]

RESIDUAL_TOL = 1e-7


@dataclass(frozen=True)
class WeightedAdjacency:
    """Edge weights over a fixed graph; induces a symmetric zero-diagonal matrix."""

    graph: Graph
    weights: tuple

    def __post_init__(self):
        edges = self.edge_order()
        if len(self.weights) != len(edges):
            raise ValueError(f"need {len(edges)} weights, got {len(self.weights)}")
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))

    def edge_order(self) -> list:
        return sorted(self.graph.edges)

    def matrix(self) -> np.ndarray:
        a = np.zeros((self.graph.n, self.graph.n))
        for (i, j), w in zip(self.edge_order(), self.weights):
            a[i, j] = a[j, i] = w
        return a

    @classmethod
    def unweighted(cls, g: Graph) -> "WeightedAdjacency":
        return cls(g, (1.0,) * len(g.edges))


@dataclass(frozen=True)
class ThetaEstimate:
    upper: float
    lower: float            # brute-force independence number when requested
    weights: tuple          # edge weights achieving `upper`
    iterations: int
    converged: bool
    history: tuple = ()     # best-so-far values, non-increasing

    def to_json_dict(self) -> dict:
        return {
            "upper": self.upper,
            "lower": self.lower,
            "iterations": self.iterations,
            "converged": self.converged,
            "weights": list(self.weights),
        }


@dataclass(frozen=True)
class OptimizerVector:
    """Vector certifying the interval minimum: |v|^2 = <1, v> and <v, A v> = 0."""

    v: np.ndarray
    norm_sq: float
    residual_orth: float
    residual_sphere: float


def _top_cluster(b: np.ndarray):
    data = spectral.eig_sym(b)
    vals, vecs = data.eigenvalues, data.eigenvectors
    top = vals[-1]
    tol = spectral.TOL_CLUSTER * max(1.0, float(np.linalg.norm(vals)))
    k = int(np.searchsorted(vals, top - tol))
    return float(top), vecs[:, k:]


def lambda_max_penalized(g: Graph, weights) -> tuple:
    """lambda_max(J - A(weights)) with one top eigenvector and its multiplicity."""
    wa = WeightedAdjacency(g, tuple(weights))
    b = np.ones((g.n, g.n)) - wa.matrix()
    value, basis = _top_cluster(b)
    return value, basis[:, 0], basis.shape[1]


def _subgradient(g: Graph, edge_order: list, b: np.ndarray):
    value, basis = _top_cluster(b)
    grad = np.empty(len(edge_order))
    for e, (i, j) in enumerate(edge_order):
        grad[e] = -2.0 * float(np.mean(basis[i, :] * basis[j, :]))
    return value, grad


def minimize_theta(
    g: Graph,
    max_iter: int = 5000,
    stall_tol: float = 1e-6,
    stall_window: int = 200,
    init_weights=None,
    scale_polish: bool = True,
    alpha_oracle: bool = False,
) -> ThetaEstimate:
    """Subgradient descent on lambda_max(J - A) over edge weights.

    Diminishing steps c / sqrt(k) with c = n / |g_1|; the best value seen is
    kept, so the reported upper bound is sound for any iterate. A final line
    search along the scaling ray t * A_best (exact for the 1-D convex
    restriction) polishes the result.
    """
    edge_order = sorted(g.edges)
    m = len(edge_order)
    n = g.n
    lower = float(independence_number(g)) if alpha_oracle else None
    if m == 0:
        upper = float(n)
        return ThetaEstimate(upper, lower if lower is not None else None,
                             (), 0, True, (upper,))
    w = np.ones(m) if init_weights is None else np.asarray(init_weights, dtype=float).copy()
    ones = np.ones((n, n))

    def matrix(weights):
        a = np.zeros((n, n))
        for e, (i, j) in enumerate(edge_order):
            a[i, j] = a[j, i] = weights[e]
        return a

    best_val = math.inf
    best_w = w.copy()
    history = []
    step_c = None
    converged = False
    iterations = 0
    for k in range(1, max_iter + 1):
        iterations = k
        value, grad = _subgradient(g, edge_order, ones - matrix(w))
        if value < best_val:
            best_val = value
            best_w = w.copy()
        history.append(best_val)
        gnorm = float(np.linalg.norm(grad))
        if gnorm <= 1e-14 * max(1.0, abs(value)):
            converged = True   # zero is a subgradient: w is optimal
            break
        if step_c is None:
            step_c = n / gnorm
        w = w - (step_c / math.sqrt(k)) * grad
        if k >= stall_window and history[-stall_window] - best_val < stall_tol:
            converged = True
            break
    if scale_polish:
        w_init = np.ones(m) if init_weights is None else np.asarray(init_weights, dtype=float)
        rays = [best_w] if np.allclose(w_init, best_w) else [best_w, w_init]
        for ray in rays:
            if np.linalg.norm(ray) <= walkgen.ZERO_NORM:
                continue
            t, value = optimal_scaling(matrix(ray))
            if value < best_val:
                best_val = value
                best_w = t * ray
                history.append(best_val)
    return ThetaEstimate(
        upper=float(best_val),
        lower=lower,
        weights=tuple(float(x) for x in best_w),
        iterations=iterations,
        converged=converged,
        history=tuple(history),
    )


def optimal_scaling(a: np.ndarray) -> tuple:
    """Minimize the convex map t -> lambda_max(J - t*a) by golden section + bisection."""
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    norm = float(np.linalg.norm(a))
    if norm <= walkgen.ZERO_NORM:
        raise ValueError("optimal scaling needs a nonzero matrix")
    ones = np.ones((n, n))

    def f(t: float) -> float:
        return float(np.linalg.eigvalsh(ones - t * a)[-1])

    sing = np.abs(np.linalg.eigvalsh(a))
    sigma_min = float(np.min(sing[sing > 1e-12 * norm]))
    reach = 4.0 * n / sigma_min
    lo, hi = -reach, reach
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - inv_phi * (hi - lo)
    x2 = lo + inv_phi * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(140):
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - inv_phi * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + inv_phi * (hi - lo)
            f2 = f(x2)
    t = x1 if f1 <= f2 else x2
    # refine on the sign of the symmetric slope, robust at eigenvalue crossings
    h = 1e-9 * (1.0 + abs(t))
    lo2, hi2 = t - 1e4 * h, t + 1e4 * h
    for _ in range(60):
        mid = 0.5 * (lo2 + hi2)
        if f(mid + h) - f(mid - h) > 0.0:
            hi2 = mid
        else:
            lo2 = mid
    t_ref = 0.5 * (lo2 + hi2)
    candidates = [(f(t), t), (f(t_ref), t_ref)]
    value, t_star = min(candidates)
    return float(t_star), float(value)


def extract_optimizer(a: np.ndarray) -> OptimizerVector:
    """Construct the vector realizing the interval minimum of the walk sum.

    Interior minima solve (I - y*A) v = 1 directly; a minimum at an interval
    endpoint (possible only when that endpoint's weight vanished) adds a
    component of prescribed length along the endpoint eigenspace.
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    if float(np.linalg.norm(a)) <= walkgen.ZERO_NORM:
        v = np.ones(n)
        return _certify(v, a)
    data = spectral.eig_sym(a)
    fn = walkgen.WalkGenFunction(
        tuple(w for _, w in data.clusters),
        tuple(r for r, _ in data.clusters),
        float(n),
    )
    opt = walkgen.minimize_on_spectral_interval(a)
    y = opt.x_star
    if not opt.at_endpoint:
        v = np.linalg.solve(np.eye(n) - y * a, np.ones(n))
        return _certify(v, a)
    vals, vecs = data.eigenvalues, data.eigenvectors
    lam_end = data.lam_min if y < 0 else data.lam_max
    tol = spectral.TOL_CLUSTER * max(1.0, float(np.linalg.norm(vals)))
    in_cluster = np.abs(vals - lam_end) <= tol
    overlaps = np.ones(n) @ vecs
    denom = np.where(in_cluster, 1.0, 1.0 - vals * y)
    coeff = np.where(in_cluster, 0.0, overlaps / denom)
    v = vecs @ coeff
    kick = math.sqrt(max(0.0, -y * fn.derivative(y)))
    v = v + kick * vecs[:, int(np.argmax(in_cluster))]
    return _certify(v, a)


def _certify(v: np.ndarray, a: np.ndarray) -> OptimizerVector:
    norm_sq = float(v @ v)
    residual_orth = abs(float(v @ a @ v))
    residual_sphere = abs(norm_sq - float(np.sum(v)))
    return OptimizerVector(v, norm_sq, residual_orth, residual_sphere)


def _gamma_band(data: spectral.SpectralData) -> tuple:
    # valid gammas make A + gamma*I semidefinite: outside (-lam_max, -lam_min)
    return -data.lam_max, -data.lam_min


def product_adjacency(
    wa_g: WeightedAdjacency,
    wa_h: WeightedAdjacency,
    gamma_g: float,
    gamma_h: float,
) -> WeightedAdjacency:
    """Weighted adjacency for the strong product built from shifted factors.

    Eigenvalues are (mu + gamma_g)(nu + gamma_h) - gamma_g*gamma_h over factor
    eigenvalue pairs. Each gamma must avoid the open band where the shifted
    factor is indefinite.
    """
    ag, ah = wa_g.matrix(), wa_h.matrix()
    for name, mat, gamma in (("gamma_g", ag, gamma_g), ("gamma_h", ah, gamma_h)):
        band_lo, band_hi = _gamma_band(spectral.eig_sym(mat))
        slack = 1e-9 * (1.0 + abs(band_lo) + abs(band_hi))
        if band_lo + slack < gamma < band_hi - slack:
            raise ValueError(
                f"{name} = {gamma} lies in the forbidden band ({band_lo}, {band_hi})"
            )
    ng, nh = wa_g.graph.n, wa_h.graph.n
    m = np.kron(ag + gamma_g * np.eye(ng), ah + gamma_h * np.eye(nh))
    m -= gamma_g * gamma_h * np.eye(ng * nh)
    product = strong_product(wa_g.graph, wa_h.graph)
    weights = tuple(float(m[i, j]) for i, j in sorted(product.edges))
    return WeightedAdjacency(product, weights)


def _interval_min_value(a: np.ndarray) -> float:
    return walkgen.minimize_on_spectral_interval(a).value


def _valid_gamma_samples(a: np.ndarray, k: int, rng: np.random.Generator = None):
    """Gammas of the form -1/x for x inside the spectral interval (always valid)."""
    norm = float(np.linalg.norm(a))
    if norm <= walkgen.ZERO_NORM:
        if rng is None:
            return [1.0, -1.0][: max(1, k)] if k <= 2 else [1.0, -1.0] + list(np.linspace(0.5, 2.0, k - 2))
        return list(rng.uniform(0.5, 2.0, size=k))
    data = spectral.eig_sym(a)
    lo, hi = 1.0 / data.lam_min, 1.0 / data.lam_max
    width = hi - lo
    xs = []
    opt = walkgen.minimize_on_spectral_interval(a)
    if rng is None:
        grid = np.concatenate([
            np.linspace(lo, -1e-3 * width, k // 2 + 1),
            np.linspace(1e-3 * width, hi, k - k // 2),
        ])
        xs = [float(x) for x in grid]
        if math.isfinite(opt.x_star) and abs(opt.x_star) > 1e-6 * width:
            xs.append(opt.x_star)
    else:
        while len(xs) < k:
            x = float(rng.uniform(lo + 1e-3 * width, hi - 1e-3 * width))
            if abs(x) > 1e-3 * width:
                xs.append(x)
    return [-1.0 / x for x in xs]


def submultiplicativity_check(
    g: Graph,
    h: Graph,
    grid: int = 8,
    n_random: int = 50,
    identity_tol: float = 1e-8,
    seed: int = 0,
) -> tuple:
    """Compare the product graph's family bound against the factor bounds.

    lhs: the walk-sum interval minimum of the product adjacency, minimized
    over a grid of valid shift pairs. rhs: product of the factors' interval
    minima. Also spot-checks the factorization identity
    W_product(-1/(gamma_g*gamma_h)) = W_g(-1/gamma_g) * W_h(-1/gamma_h)
    at `n_random` random valid shift pairs.
    """
    wa_g = WeightedAdjacency.unweighted(g)
    wa_h = WeightedAdjacency.unweighted(h)
    ag, ah = wa_g.matrix(), wa_h.matrix()
    rhs = _interval_min_value(ag) * _interval_min_value(ah)
    lhs = math.inf
    for gg in _valid_gamma_samples(ag, grid):
        for gh in _valid_gamma_samples(ah, grid):
            if abs(gg * gh) < 1e-12:
                continue
            wa_p = product_adjacency(wa_g, wa_h, gg, gh)
            lhs = min(lhs, _interval_min_value(wa_p.matrix()))
    rng = np.random.default_rng(seed)
    for gg, gh in zip(
        _valid_gamma_samples(ag, n_random, rng),
        _valid_gamma_samples(ah, n_random, rng),
    ):
        wa_p = product_adjacency(wa_g, wa_h, gg, gh)
        x_p = -1.0 / (gg * gh)
        left = walkgen.build(wa_p.matrix()).value(x_p)
        right = walkgen.build(ag).value(-1.0 / gg) * walkgen.build(ah).value(-1.0 / gh)
        if abs(left - right) > identity_tol * (1.0 + abs(right)):
            raise AssertionError(
                f"factorization identity failed at gammas ({gg}, {gh}): {left} vs {right}"
            )
    ok = lhs <= rhs + 1e-6
    return float(lhs), float(rhs), bool(ok)
