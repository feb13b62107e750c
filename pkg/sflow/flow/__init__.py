from .axioms import AXIOMS, AxiomResult, RsAxiomReport, rs_axiom_suite
from .engines import (
    Contribution,
    FlowBreakdown,
    ProjectionPairIndex,
    endpoint_flow,
    essential_codimension,
    fredholm_flow,
    integer_engines,
    projection_pair_index,
    segment_points,
    total_intersection_number,
    total_resonance_index,
)
from .report import FlowReport, ResonanceRow, flow_report
from .ssf import SsfResult, graded_breaks, poisson_integrand, ssf_poisson
from .stability import PerturbedGroup, StabilityReport, group_split, stability_check

__all__ = [
    "AXIOMS",
    "AxiomResult",
    "RsAxiomReport",
    "rs_axiom_suite",
    "Contribution",
    "FlowBreakdown",
    "ProjectionPairIndex",
    "endpoint_flow",
    "essential_codimension",
    "fredholm_flow",
    "integer_engines",
    "projection_pair_index",
    "segment_points",
    "total_intersection_number",
    "total_resonance_index",
    "FlowReport",
    "ResonanceRow",
    "flow_report",
    "SsfResult",
    "graded_breaks",
    "poisson_integrand",
    "ssf_poisson",
    "PerturbedGroup",
    "StabilityReport",
    "group_split",
    "stability_check",
]
