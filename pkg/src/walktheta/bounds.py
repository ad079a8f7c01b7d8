"""Spectral upper bounds on the independence and theta numbers of a graph."""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import spectral, walkgen
from .graphs import Graph, adjacency, laplacian, min_degree

__all__ = [
    "BoundReport",
    "hoffman_regular",
    "walkgen_bound",
    "closed_form_bound",
    "laplacian_bound",
    "report",
]

DOMINANCE_TOL = 1e-8
CONDITION_TOL = 1e-9


@dataclass(frozen=True)
class BoundReport:
    """All bounds for one graph, with the dominance check already evaluated."""

    n: int
    hoffman_regular: float          # None unless the graph is regular with edges
    walkgen_bound: float
    closed_form_value: float        # None when the ratio condition fails or no edges
    closed_form_condition: bool     # None for edgeless graphs
    laplacian_bound: float
    independence_witness: int
    dominance_ok: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "bounds": {
                "hoffman": self.hoffman_regular,
                "walkgen": self.walkgen_bound,
                "closed_form": {
                    "value": self.closed_form_value,
                    "condition": self.closed_form_condition,
                },
                "laplacian": self.laplacian_bound,
            },
            "dominance_ok": self.dominance_ok,
            "alpha_witness": self.independence_witness,
        }


def hoffman_regular(g: Graph):
    """Ratio bound -n*lam_min/(lam_max - lam_min); defined for regular graphs with edges."""
    if not g.edges or not g.is_regular():
        return None
    data = spectral.eig_sym(adjacency(g))
    return float(-data.lam_min * g.n / (data.lam_max - data.lam_min))


def walkgen_bound(g: Graph) -> float:
    """Minimum of the walk-generating function over [1/lam_min, 0]."""
    if not g.edges:
        return float(g.n)
    a = adjacency(g)
    lam_min = spectral.eig_sym(a).lam_min
    return walkgen.minimize_on_subinterval(a, 1.0 / lam_min, 0.0).value


def closed_form_bound(g: Graph):
    """Closed-form bound from the top-cluster weight, with its validity condition.

    Returns (value, condition_satisfied); value is None when the condition
    fails. Requires at least one edge.
    """
    if not g.edges:
        raise ValueError("closed-form bound needs a graph with at least one edge")
    data = spectral.eig_sym(adjacency(g))
    n = g.n
    lam1, lamn = data.lam_max, data.lam_min
    w1 = 0.0
    for rep, weight in data.clusters:
        if abs(rep - lam1) <= spectral.TOL_CLUSTER * max(1.0, abs(lam1)):
            w1 = weight
    if w1 <= 0.0:
        return None, False
    excess = max(0.0, n - w1)
    if excess <= spectral.TOL_WEIGHT * n:
        excess = 0.0            # residual weight below the cluster-drop threshold
    ratio = -lamn * excess / (lam1 * w1)
    condition = ratio <= 1.0 + CONDITION_TOL
    if not condition:
        return None, False
    r = math.sqrt(lam1 * excess / (-lamn * w1))
    value = (-n * lamn / (lam1 - lamn)) * (w1 / n) * (1.0 + r) ** 2
    return float(value), True


def laplacian_bound(g: Graph) -> float:
    """n * (1 - min_degree / lam_max(L)); edgeless graphs give the trivial n."""
    if not g.edges:
        return float(g.n)
    mu1 = spectral.eig_sym(laplacian(g)).lam_max
    return float(g.n * (1.0 - min_degree(g) / mu1))


def report(g: Graph, known_alpha: int = None) -> BoundReport:
    """Assemble all bounds and check dominance of the walkgen bound.

    When a known independence number is supplied, every computed bound must
    cover it; a violation raises since it would falsify a theorem.
    """
    wg = walkgen_bound(g)
    lap = laplacian_bound(g)
    hoff = hoffman_regular(g)
    if g.edges:
        cf_value, cf_condition = closed_form_bound(g)
    else:
        cf_value, cf_condition = None, None
    dominance_ok = wg <= lap + DOMINANCE_TOL
    if known_alpha is not None:
        for name, value in (("walkgen", wg), ("laplacian", lap),
                            ("hoffman", hoff), ("closed_form", cf_value)):
            if value is not None and value < known_alpha - DOMINANCE_TOL:
                raise ValueError(
                    f"{name} bound {value} fell below the known independence number {known_alpha}"
                )
    return BoundReport(
        n=g.n,
        hoffman_regular=hoff,
        walkgen_bound=float(wg),
        closed_form_value=cf_value,
        closed_form_condition=cf_condition,
        laplacian_bound=float(lap),
        independence_witness=known_alpha,
        dominance_ok=bool(dominance_ok),
    )
