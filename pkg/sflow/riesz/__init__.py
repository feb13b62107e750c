from .calculus import (
    JordanProfile,
    RieszPair,
    RieszResiduals,
    contour_moments,
    contour_radius,
    holomorphic_part,
    jordan_profile,
    local_projection,
    neighbour_points,
    nilpotency_order,
    pair_orthogonality,
    reduces_orders_check,
    resonance_space,
    resonance_space_dims,
    riesz_pair,
)
from .vectors import (
    DepthCriterion,
    ProbeReport,
    depth_criterion_probe,
    depth_one_criterion,
    vector_order_depth,
)

__all__ = [
    "JordanProfile",
    "RieszPair",
    "RieszResiduals",
    "contour_moments",
    "contour_radius",
    "holomorphic_part",
    "jordan_profile",
    "local_projection",
    "neighbour_points",
    "nilpotency_order",
    "pair_orthogonality",
    "reduces_orders_check",
    "resonance_space",
    "resonance_space_dims",
    "riesz_pair",
    "DepthCriterion",
    "ProbeReport",
    "depth_criterion_probe",
    "depth_one_criterion",
    "vector_order_depth",
]
