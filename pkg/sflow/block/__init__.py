from .decomposition import BlockDecomposition, block_split, eigenspace
from .identities import (
    IdentityTable,
    PropertyReport,
    identity_S_A,
    identity_table,
    order_k_span_check,
    property_AB,
)
from .laurent import (
    LaurentData,
    complement_poles,
    laurent_D,
    lemma_chain_residuals,
    schur_block,
    schur_consistency,
)
from .tangency import (
    CurveSamples,
    curve_point,
    curve_to_csv,
    default_s_grid,
    tangency_order,
    trace_resonance_curve,
)

__all__ = [
    "BlockDecomposition",
    "block_split",
    "eigenspace",
    "IdentityTable",
    "PropertyReport",
    "identity_S_A",
    "identity_table",
    "order_k_span_check",
    "property_AB",
    "LaurentData",
    "complement_poles",
    "laurent_D",
    "lemma_chain_residuals",
    "schur_block",
    "schur_consistency",
    "CurveSamples",
    "curve_point",
    "curve_to_csv",
    "default_s_grid",
    "tangency_order",
    "trace_resonance_curve",
]
