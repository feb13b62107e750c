from .cycles import (
    Cycle,
    CycleAnalysis,
    PuiseuxEstimate,
    RealMemberReport,
    SignEvidence,
    analyze_cycles,
    cycle_decomposition,
    cycle_sign,
    cycles_of,
    intersection_number,
    puiseux_leading,
    real_member_check,
    sign_evidence,
)
from .projections import (
    BlowupRate,
    CycleProjection,
    EqualShare,
    PartitionReport,
    blowup_rate,
    cycle_projection,
    equal_share_check,
    moment_limit_check,
    projection_partition,
)
from .tracking import MonodromyTrace, assign, radial_continuation, trace_to_csv, track_group

__all__ = [
    "Cycle",
    "CycleAnalysis",
    "PuiseuxEstimate",
    "RealMemberReport",
    "SignEvidence",
    "analyze_cycles",
    "cycle_decomposition",
    "cycle_sign",
    "cycles_of",
    "intersection_number",
    "puiseux_leading",
    "real_member_check",
    "sign_evidence",
    "BlowupRate",
    "CycleProjection",
    "EqualShare",
    "PartitionReport",
    "blowup_rate",
    "cycle_projection",
    "equal_share_check",
    "moment_limit_check",
    "projection_partition",
    "MonodromyTrace",
    "assign",
    "radial_continuation",
    "trace_to_csv",
    "track_group",
]
