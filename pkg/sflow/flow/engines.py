# -*- coding: utf-8 -*-
"""************************************************************
### Date: 10/12/2026 10:41:13
### LastEditTime: 10/12/2026 13:58:44
### FilePath: //sflow//flow//engines.py
### Description: Path-level spectral flow as total resonance index, total
###              intersection number, endpoint count and telescoping
###              essential codimension.
###
**********************************************************"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from sflow.config import SpectralConfig, resolve
from sflow.core.linalg import numerical_rank, range_basis
from sflow.core.resolvent import counting_above, spectral_projection_above
from sflow.errors import ResonantEndpoint, ResonantVertex, ThresholdTooClose
from sflow.index.engine import resonance_index
from sflow.monodromy.cycles import intersection_number
from sflow.resonance.locator import ResonancePoint, real_resonance_points_on_segment
from sflow.types import OperatorPath

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Contribution:
    """One real resonance point of one segment and what it adds to the flow."""

    segment: int
    r: float
    N: int
    m: int
    value: int


@dataclass(frozen=True)
class FlowBreakdown:
    total: int
    contributions: Tuple[Contribution, ...]

    def __int__(self) -> int:
        return self.total


def segment_points(
    path: OperatorPath, lam: float, config: Optional[SpectralConfig] = None
) -> List[Tuple[int, ResonancePoint]]:
    """(segment, point) for every real resonance point strictly inside a segment."""
    cfg = resolve(config)
    out = []
    for j, seg in enumerate(path.segments(lam)):
        try:
            points = real_resonance_points_on_segment(lam, seg.H, seg.V, (0.0, 1.0), cfg)
        except ResonantEndpoint as err:
            vertex = j if err.details.get("s") == 0.0 else j + 1
            raise ResonantVertex(
                f"vertex {vertex} of the path is resonant at lambda={lam}",
                {"vertex": vertex, **err.details},
            ) from err
        out.extend((j, p) for p in points)
    LOGGER.debug("%d real resonance points on %d segments", len(out), path.n_segments)
    return out


def total_resonance_index(
    path: OperatorPath, lam: float, config: Optional[SpectralConfig] = None
) -> FlowBreakdown:
    """Sum of resonance indices over the real resonance points of every segment."""
    cfg = resolve(config)
    parts = []
    for j, p in segment_points(path, lam, cfg):
        report = resonance_index(path.segment(j, lam), p, config=cfg)
        parts.append(Contribution(segment=j, r=p.real, N=report.N, m=report.m, value=report.index))
    return FlowBreakdown(total=sum(c.value for c in parts), contributions=tuple(parts))


def total_intersection_number(
    path: OperatorPath, lam: float, config: Optional[SpectralConfig] = None
) -> FlowBreakdown:
    """Sum over resonance points of the cycle-parity weighted cycle signs."""
    cfg = resolve(config)
    parts = []
    for j, p in segment_points(path, lam, cfg):
        value = intersection_number(path.segment(j, lam), p, cfg)
        parts.append(Contribution(segment=j, r=p.real, N=p.algebraic_mult, m=p.geometric_mult, value=value))
    return FlowBreakdown(total=sum(c.value for c in parts), contributions=tuple(parts))


def endpoint_flow(path: OperatorPath, lam: float, config: Optional[SpectralConfig] = None) -> int:
    """Eigenvalues above lambda at the end minus those at the start."""
    cfg = resolve(config)
    return counting_above(path.end, lam, cfg) - counting_above(path.start, lam, cfg)


# -----------------------------
# Essential codimension
# -----------------------------


@dataclass(frozen=True)
class ProjectionPairIndex:
    """Kernel and cokernel dimensions of PQ restricted to the range of Q."""

    kernel: int
    cokernel: int

    @property
    def index(self) -> int:
        return self.kernel - self.cokernel


def essential_codimension(P: np.ndarray, Q: np.ndarray, config: Optional[SpectralConfig] = None) -> int:
    """rank Q - rank P for finite-rank projections."""
    tol = resolve(config).tolerances.rank_tol
    return numerical_rank(np.asarray(Q), tol).rank - numerical_rank(np.asarray(P), tol).rank


def projection_pair_index(P: np.ndarray, Q: np.ndarray, config: Optional[SpectralConfig] = None) -> ProjectionPairIndex:
    """Index of PQ : range(Q) -> range(P) from explicit kernel and cokernel."""
    tol = resolve(config).tolerances.rank_tol
    P, Q = np.asarray(P, dtype=complex), np.asarray(Q, dtype=complex)
    up = range_basis(P, tol)
    uq = range_basis(Q, tol)
    if up.shape[1] == 0 or uq.shape[1] == 0:
        return ProjectionPairIndex(kernel=uq.shape[1], cokernel=up.shape[1])
    m = up.conj().T @ P @ Q @ uq
    rank = numerical_rank(m, tol, reference=1.0).rank
    return ProjectionPairIndex(kernel=uq.shape[1] - rank, cokernel=up.shape[1] - rank)


def _partition(path: OperatorPath, lam: float, refine: int, cfg: SpectralConfig) -> List[np.ndarray]:
    """Spectral projections above lambda at the vertices and at regular interior
    parameters of every segment; parameters too close to a crossing are skipped."""
    grid = np.linspace(0.0, 1.0, refine + 1)
    out = [spectral_projection_above(path.start, lam, cfg)]
    for j in range(path.n_segments):
        for r in grid[1:]:
            try:
                out.append(spectral_projection_above(path.point(j, float(r)), lam, cfg))
            except ThresholdTooClose:
                LOGGER.debug("segment %d: skipping r=%.4f next to a crossing", j, r)
    return out


def fredholm_flow(
    path: OperatorPath, lam: float, refine: int = 4, config: Optional[SpectralConfig] = None
) -> int:
    """Telescoping sum of ec(E_k, E_{k+1}) over a refined partition, each term
    taken as the index of the projection pair."""
    cfg = resolve(config)
    projections = _partition(path, lam, max(1, int(refine)), cfg)
    total = 0
    for a, b in zip(projections[:-1], projections[1:]):
        total += projection_pair_index(a, b, cfg).index
    return total


def integer_engines(
    path: OperatorPath, lam: float, config: Optional[SpectralConfig] = None
) -> Sequence[int]:
    """(tri, intersection, endpoint)."""
    cfg = resolve(config)
    return (
        total_resonance_index(path, lam, cfg).total,
        total_intersection_number(path, lam, cfg).total,
        endpoint_flow(path, lam, cfg),
    )
