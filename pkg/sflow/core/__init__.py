from .linalg import (
    RankDecision,
    cluster_points,
    hermitian_part,
    inclusion_residual,
    matrix_power,
    max_principal_angle,
    norm,
    null_basis,
    numerical_rank,
    orthogonal_complement,
    orthonormalize,
    range_basis,
    signature_counts,
)
from .resolvent import (
    a_operator,
    a_operator_batch,
    b_operator,
    counting_above,
    counting_below,
    eigh,
    fix_phases,
    resolvent,
    second_resolvent_residual,
    spectral_projection_above,
)

__all__ = [
    "RankDecision",
    "cluster_points",
    "hermitian_part",
    "inclusion_residual",
    "matrix_power",
    "max_principal_angle",
    "norm",
    "null_basis",
    "numerical_rank",
    "orthogonal_complement",
    "orthonormalize",
    "range_basis",
    "signature_counts",
    "a_operator",
    "a_operator_batch",
    "b_operator",
    "counting_above",
    "counting_below",
    "eigh",
    "fix_phases",
    "resolvent",
    "second_resolvent_residual",
    "spectral_projection_above",
]
