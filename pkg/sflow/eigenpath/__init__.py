from .branches import (
    DerivativeTable,
    EigenBranch,
    branch_order,
    branch_step,
    branches_to_csv,
    disentangled_basis,
    eigen_branches,
    match_step,
    vector_derivatives,
)
from .derivatives import Estimate, fd_weights, richardson, stencil_derivative
from .structure import (
    JordanBasis,
    OrderConditions,
    OrthogonalityReport,
    Reconstruction,
    jordan_basis,
    orthogonality_suite,
    reconstruct_P,
    tfae_order_check,
)

__all__ = [
    "DerivativeTable",
    "EigenBranch",
    "branch_order",
    "branch_step",
    "branches_to_csv",
    "disentangled_basis",
    "eigen_branches",
    "match_step",
    "vector_derivatives",
    "Estimate",
    "fd_weights",
    "richardson",
    "stencil_derivative",
    "JordanBasis",
    "OrderConditions",
    "OrthogonalityReport",
    "Reconstruction",
    "jordan_basis",
    "orthogonality_suite",
    "reconstruct_P",
    "tfae_order_check",
]
