"""Spectral upper bounds on graph independence via walk-generating functions."""

from .graphs import (
    Graph,
    Graph6ParseError,
    adjacency,
    encode_graph6,
    generate_named,
    laplacian,
    min_degree,
    parse_edge_list,
    parse_graph6,
    strong_product,
)
from .spectral import SpectralData, cluster_weights, eig_sym
from .walkgen import (
    IntervalMin,
    PoleProximityError,
    WalkGenFunction,
    build,
    minimize_on_spectral_interval,
    minimize_on_subinterval,
    sample,
)
from .reciprocal import (
    CriticalReport,
    ReciprocalSum,
    central_strip,
    enumerate_critical_points,
    has_critical_points,
    polynomial_critical_points,
    verify_duality,
)
from .bounds import (
    BoundReport,
    closed_form_bound,
    hoffman_regular,
    laplacian_bound,
    report,
    walkgen_bound,
)
from .independent_set import independence_number, max_independent_set
from .theta import (
    OptimizerVector,
    ThetaEstimate,
    WeightedAdjacency,
    extract_optimizer,
    lambda_max_penalized,
    minimize_theta,
    optimal_scaling,
    product_adjacency,
    submultiplicativity_check,
)

__version__ = "0.1.0"
