# -*- coding: utf-8 -*-
"""************************************************************
### Date: 08/25/2026 12:15:15
### LastEditTime: 08/25/2026 13:32:46
### FilePath: //sflow//errors.py
### Description: Exception hierarchy. Every class carries the process exit
###              code the CLI reports when it escapes.
###
**********************************************************"""
from __future__ import annotations

from typing import Any, Dict, Optional


class SpectralFlowError(Exception):
    """Base class of every error raised by the package."""

    exit_code: int = 3

    def __init__(self, message: str = "", details: Optional[Dict[str, Any]] = None):
        super().__init__(message or self.__class__.__name__)
        self.details: Dict[str, Any] = dict(details or {})


# -----------------------------
# Input errors (exit 2)
# -----------------------------


class InputError(SpectralFlowError):
    exit_code = 2


class NotHermitian(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class SchemaError(InputError):
    pass


# -----------------------------
# Numerical failures (exit 3)
# -----------------------------


class NumericalFailure(SpectralFlowError):
    exit_code = 3


class ResolventSingular(NumericalFailure):
    pass


class ThresholdTooClose(NumericalFailure):
    pass


class NoRegularBasePoint(NumericalFailure):
    pass


class IllConditionedEigenproblem(NumericalFailure):
    pass


class ResonantEndpoint(NumericalFailure):
    pass


class ResonantVertex(NumericalFailure):
    pass


class GroupLeak(NumericalFailure):
    pass


class ContourCrossesPole(NumericalFailure):
    pass


class QuadratureNotConverged(NumericalFailure):
    pass


class RankAmbiguous(NumericalFailure):
    pass


class SDependence(NumericalFailure):
    pass


class NotAResonanceVector(NumericalFailure):
    pass


class Unstable(NumericalFailure):
    pass


class SignatureAmbiguous(NumericalFailure):
    pass


class TrackingAmbiguous(NumericalFailure):
    pass


class GroupCollision(NumericalFailure):
    pass


class NoConvergence(NumericalFailure):
    pass


class BranchEntanglement(NumericalFailure):
    pass


class OrderAmbiguous(NumericalFailure):
    pass


class DerivativeNoise(NumericalFailure):
    pass


class BMatrixSingular(NumericalFailure):
    pass


class DNotHermitian(NumericalFailure):
    pass


class RootBracketFail(NumericalFailure):
    pass


class GenerationFailed(NumericalFailure):
    pass


# -----------------------------
# Cross-check failures (exit 4)
# -----------------------------


class CrossCheckFailure(SpectralFlowError):
    """Two independent computations of the same quantity disagree."""

    exit_code = 4


class CriterionMismatch(CrossCheckFailure):
    pass


class CycleJordanMismatch(CrossCheckFailure):
    pass


class SignDisagreement(CrossCheckFailure):
    pass


class ExponentMismatch(CrossCheckFailure):
    pass


class TangencyMismatch(CrossCheckFailure):
    pass


class EngineDisagreement(CrossCheckFailure):
    pass
