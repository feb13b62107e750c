from .operators import Direction, HermitianOperator, OperatorPath, Spectrum, Triple

__all__ = [
    "HermitianOperator",
    "Direction",
    "Triple",
    "OperatorPath",
    "Spectrum",
]
