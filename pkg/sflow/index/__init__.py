from .engine import (
    IndexReport,
    IndexSignature,
    ResonanceMatrix,
    as_point,
    index_signature_check,
    point_indices,
    resonance_index,
    resonance_matrix,
)
from .reduction import (
    AntisymmetryReport,
    ConstancyReport,
    ReductionReport,
    antisymmetry_check,
    local_constancy_check,
    plane_homotopy_check,
    reduced_direction,
    reduced_index_check,
    resolvent_reduction_residual,
)

__all__ = [
    "IndexReport",
    "IndexSignature",
    "ResonanceMatrix",
    "as_point",
    "index_signature_check",
    "point_indices",
    "resonance_index",
    "resonance_matrix",
    "AntisymmetryReport",
    "ConstancyReport",
    "ReductionReport",
    "antisymmetry_check",
    "local_constancy_check",
    "plane_homotopy_check",
    "reduced_direction",
    "reduced_index_check",
    "resolvent_reduction_residual",
]
