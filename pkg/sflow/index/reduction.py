# -*- coding: utf-8 -*-
"""************************************************************
### Date: 09/20/2026 11:46:38
### LastEditTime: 09/20/2026 13:03:09
### FilePath: //sflow//index//reduction.py
### Description: Reduction of the direction V to the finite-rank VP and the
###              checks built on it: equal indices, resolvent identity, the
###              straight homotopy between V and VP, stability and sign flip.
###
**********************************************************"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np
import scipy.linalg

from sflow.config import SpectralConfig, resolve
from sflow.core.linalg import hermitian_part, norm, random_hermitian
from sflow.index.engine import PointLike, as_point, resonance_index, resonance_matrix
from sflow.resonance.locator import group_radius
from sflow.riesz.calculus import riesz_pair
from sflow.types import Direction, Triple

LOGGER = logging.getLogger(__name__)

_DEFAULT_S = (0.05j, 0.1 + 0.1j, -0.2 + 0.02j, 0.5j, -0.03 - 0.07j)


def reduced_direction(t: Triple, r: PointLike, config: Optional[SpectralConfig] = None) -> Triple:
    """(lambda; H_r, VP) with the resonance point moved to 0."""
    cfg = resolve(config)
    point = as_point(t, r, cfg)
    pair = riesz_pair(t, point, config=cfg)
    vp = hermitian_part(t.V.entries @ pair.P)
    return Triple(t.lam, t.operator_at(point.real), Direction(vp))


@dataclass(frozen=True)
class ReductionReport:
    index_V: int
    index_VP: int
    signature_V: int
    signature_VP: int
    P_residual: float
    A_residual: float

    @property
    def agree(self) -> bool:
        return self.index_V == self.index_VP and self.signature_V == self.signature_VP


def reduced_index_check(t: Triple, r: PointLike, config: Optional[SpectralConfig] = None) -> ReductionReport:
    """Indices, signatures and contour pairs for V against VP."""
    cfg = resolve(config)
    point = as_point(t, r, cfg)
    reduced = reduced_direction(t, point, cfg)
    local = as_point(reduced, 0.0, cfg)
    pair = riesz_pair(t, point, config=cfg)
    pair_vp = riesz_pair(reduced, local, config=cfg)
    return ReductionReport(
        index_V=resonance_index(t, point, config=cfg).index,
        index_VP=resonance_index(reduced, local, config=cfg).index,
        signature_V=resonance_matrix(t, point, pair=pair, config=cfg).signature,
        signature_VP=resonance_matrix(reduced, local, pair=pair_vp, config=cfg).signature,
        P_residual=norm(pair.P - pair_vp.P),
        A_residual=norm(pair.A_nilpotent - pair_vp.A_nilpotent),
    )


def resolvent_reduction_residual(
    t: Triple,
    r: PointLike,
    s_values: Sequence[complex] = _DEFAULT_S,
    config: Optional[SpectralConfig] = None,
) -> float:
    """max_s ||R(H_r + s VP) VP - R(H_r + s V) VP|| relative to the second term."""
    cfg = resolve(config)
    reduced = reduced_direction(t, r, cfg)
    h_r = reduced.H.entries
    vp = reduced.V.entries
    eye = np.eye(t.dim)
    worst = 0.0
    for s in s_values:
        left = np.linalg.solve(h_r + s * vp - t.lam * eye, vp)
        right = np.linalg.solve(h_r + s * t.V.entries - t.lam * eye, vp)
        worst = max(worst, norm(left - right) / max(1.0, norm(right)))
    return worst


def plane_homotopy_check(
    t: Triple,
    r: PointLike,
    eps: Optional[float] = None,
    steps: int = 11,
    config: Optional[SpectralConfig] = None,
) -> float:
    """Smallest distance from lambda to spec(H_r + s((1 - tau)V + tau VP)) over a
    grid of tau in [0, 1] and 0 < |s| <= eps; positive means the point stays isolated."""
    cfg = resolve(config)
    point = as_point(t, r, cfg)
    reduced = reduced_direction(t, point, cfg)
    if eps is None:
        eps = min(0.05, 0.5 * group_radius(t, point, cfg))
    h_r = reduced.H.entries
    worst = np.inf
    for tau in np.linspace(0.0, 1.0, steps):
        direction = (1 - tau) * t.V.entries + tau * reduced.V.entries
        for s in eps * np.array([-1.0, -0.5, -0.25, 0.25, 0.5, 1.0]):
            w = scipy.linalg.eigvalsh(h_r + s * direction)
            worst = min(worst, float(np.min(np.abs(w - t.lam))))
    return float(worst)


@dataclass(frozen=True)
class ConstancyReport:
    applicable: bool
    base_index: int
    indices: List[int]

    @property
    def holds(self) -> bool:
        return all(i == self.base_index for i in self.indices)


def local_constancy_check(
    t: Triple,
    r: PointLike,
    size: float,
    trials: int,
    rng: np.random.Generator,
    config: Optional[SpectralConfig] = None,
) -> ConstancyReport:
    """Index at r under relative perturbations of V; applies to order-one points."""
    cfg = resolve(config)
    point = as_point(t, r, cfg)
    base = resonance_index(t, point, config=cfg).index
    pair = riesz_pair(t, point, config=cfg)
    if pair.order != 1:
        return ConstancyReport(applicable=False, base_index=base, indices=[])
    h_r = t.operator_at(point.real)
    indices = []
    for _ in range(trials):
        w = random_hermitian(t.dim, rng)
        w *= size * max(t.V.norm, 1e-12) / max(norm(w), 1e-300)
        moved = Triple(t.lam, h_r, Direction(t.V.entries + w))
        indices.append(resonance_index(moved, as_point(moved, 0.0, cfg), config=cfg).index)
    return ConstancyReport(applicable=True, base_index=base, indices=indices)


@dataclass(frozen=True)
class AntisymmetryReport:
    index_V: int
    index_minus_V: int

    @property
    def holds(self) -> bool:
        return self.index_minus_V == -self.index_V


def antisymmetry_check(t: Triple, r: PointLike, config: Optional[SpectralConfig] = None) -> AntisymmetryReport:
    cfg = resolve(config)
    point = as_point(t, r, cfg)
    flipped = Triple(t.lam, t.operator_at(point.real), -t.V)
    return AntisymmetryReport(
        index_V=resonance_index(t, point, config=cfg).index,
        index_minus_V=resonance_index(flipped, as_point(flipped, 0.0, cfg), config=cfg).index,
    )
