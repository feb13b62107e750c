# -*- coding: utf-8 -*-
"""************************************************************
### Date: 10/06/2026 13:20:40
### LastEditTime: 10/06/2026 16:37:11
### FilePath: //sflow//flow//stability.py
### Description: The group of a resonance point under small perturbations of
###              V or H: the indices of the split points sum to the parent index.
###
**********************************************************"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from sflow.config import SpectralConfig, resolve
from sflow.core.linalg import norm, random_hermitian
from sflow.errors import GroupLeak
from sflow.index.engine import PointLike, as_point, resonance_index
from sflow.resonance.locator import Window, group_radius, resonance_points
from sflow.types import Direction, HermitianOperator, Triple

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class PerturbedGroup:
    """Split of the group of r for one perturbed triple."""

    target: str
    real_points: Tuple[float, ...]
    indices: Tuple[int, ...]
    complex_points: int

    @property
    def total(self) -> int:
        return sum(self.indices)


@dataclass(frozen=True)
class StabilityReport:
    r: float
    index: int
    size: float
    groups: Tuple[PerturbedGroup, ...]

    @property
    def failures(self) -> List[PerturbedGroup]:
        return [g for g in self.groups if g.total != self.index]

    @property
    def holds(self) -> bool:
        return not self.failures


def group_split(
    t: Triple, r: float, radius: float, N: int, target: str, config: Optional[SpectralConfig] = None
) -> PerturbedGroup:
    """Resonance points of the perturbed triple within `radius` of r and the
    indices of its real ones."""
    cfg = resolve(config)
    found = resonance_points(t, t.lam, Window(complex(r), radius), cfg)
    total = sum(p.algebraic_mult for p in found)
    if total != N:
        raise GroupLeak(
            f"perturbed group of r={r} holds {total} points, expected {N}",
            {"r": r, "members": total, "expected": N},
        )
    real = sorted((p for p in found if p.is_real), key=lambda p: p.real)
    indices = tuple(resonance_index(t, p, config=cfg).index for p in real)
    return PerturbedGroup(
        target=target,
        real_points=tuple(p.real for p in real),
        indices=indices,
        complex_points=sum(1 for p in found if not p.is_real),
    )


def stability_check(
    t: Triple,
    r: PointLike,
    perturbation_size: float = 1e-3,
    trials: int = 10,
    rng: Optional[np.random.Generator] = None,
    config: Optional[SpectralConfig] = None,
) -> StabilityReport:
    """Perturb V -> W and, separately, H -> H' by random Hermitian matrices of
    the given relative size and sum the indices over the group of r."""
    cfg = resolve(config)
    rng = np.random.default_rng(cfg.seed) if rng is None else rng
    point = as_point(t, r, cfg)
    parent = resonance_index(t, point, config=cfg).index
    radius = group_radius(t, point, cfg)
    groups = []
    for _ in range(trials):
        w = random_hermitian(t.dim, rng)
        w = w / max(norm(w), 1e-300)
        moved_v = Triple(t.lam, t.H, Direction(t.V.entries + perturbation_size * max(t.V.norm, 1.0) * w))
        groups.append(group_split(moved_v, point.real, radius, point.algebraic_mult, "V", cfg))
        w = random_hermitian(t.dim, rng)
        w = w / max(norm(w), 1e-300)
        moved_h = Triple(t.lam, HermitianOperator(t.H.entries + perturbation_size * max(t.H.norm, 1.0) * w), t.V)
        groups.append(group_split(moved_h, point.real, radius, point.algebraic_mult, "H", cfg))
    report = StabilityReport(r=point.real, index=parent, size=perturbation_size, groups=tuple(groups))
    if not report.holds:
        LOGGER.warning("index %d at r=%s not reproduced by %d perturbations", parent, point.real, len(report.failures))
    return report
