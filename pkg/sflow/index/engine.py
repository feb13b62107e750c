# -*- coding: utf-8 -*-
"""************************************************************
### Date: 08/13/2026 18:33:09
### LastEditTime: 08/13/2026 19:50:40
### FilePath: //sflow//index//engine.py
### Description: Resonance index by half-plane counting of the perturbed
###              group, the resonance matrix VP and its signature.
###
**********************************************************"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import scipy.linalg

from sflow.config import SpectralConfig, resolve
from sflow.core.linalg import hermitian_part, norm, numerical_rank, signature_counts
from sflow.errors import GroupLeak, IllConditionedEigenproblem, SignatureAmbiguous, Unstable
from sflow.resonance.locator import ResonancePoint, Window, group_members, group_radius, resonance_points
from sflow.riesz.calculus import RieszPair, riesz_pair
from sflow.types import Triple

LOGGER = logging.getLogger(__name__)

PointLike = Union[ResonancePoint, float]


@dataclass(frozen=True)
class IndexReport:
    """Half-plane split of the group of a real resonance point."""

    N_plus: int
    N_minus: int
    N: int
    m: int
    y_used: float
    stable: bool
    leaks: int = 0

    @property
    def index(self) -> int:
        return self.N_plus - self.N_minus

    @property
    def u_turn_ok(self) -> bool:
        return abs(self.index) <= self.m


@dataclass(frozen=True, eq=False)
class ResonanceMatrix:
    M: np.ndarray
    rank: int
    positive: int
    negative: int
    herm_residual: float

    @property
    def signature(self) -> int:
        return self.positive - self.negative


def as_point(t: Triple, r: PointLike, config: Optional[SpectralConfig] = None) -> ResonancePoint:
    """The located real resonance point closest to r."""
    if isinstance(r, ResonancePoint):
        return r
    cfg = resolve(config)
    found = [p for p in resonance_points(t, t.lam, Window(complex(r), 0.05), cfg) if p.is_real]
    if not found:
        raise IllConditionedEigenproblem(f"no real resonance point near r={r}", {"r": float(r)})
    return min(found, key=lambda p: abs(p.r - r))


def resonance_index(
    t: Triple,
    r: PointLike,
    y_schedule: Optional[Sequence[float]] = None,
    config: Optional[SpectralConfig] = None,
) -> IndexReport:
    """N_+ - N_- for the group of r at z = lambda + iy, accepted once stable."""
    cfg = resolve(config)
    point = as_point(t, r, cfg)
    schedule = cfg.schedules.y_schedule if y_schedule is None else tuple(y_schedule)
    radius = group_radius(t, point, cfg)
    n = point.algebraic_mult
    previous: Optional[Tuple[int, int]] = None
    leaks = 0
    for rel_y in schedule:
        y = rel_y * t.scale
        try:
            members = group_members(t, point.r, t.lam + 1j * y, radius, parent_mult=n, config=cfg)
        except GroupLeak as err:
            leaks += 1
            previous = None
            LOGGER.warning("skipping y=%.3e at r=%s: %s", y, point.r, err)
            continue
        counts = (
            sum(1 for p in members if p.r.imag > 0),
            sum(1 for p in members if p.r.imag < 0),
        )
        LOGGER.debug("y=%.3e: N+=%d N-=%d", y, *counts)
        if previous == counts and sum(counts) == n:
            return IndexReport(
                N_plus=counts[0],
                N_minus=counts[1],
                N=n,
                m=point.geometric_mult,
                y_used=y,
                stable=True,
                leaks=leaks,
            )
        previous = counts
    details = {"r": complex(point.r), "leaks": leaks, "N": n}
    if leaks:
        raise GroupLeak(f"group of r={point.r} leaked on {leaks} y values without a stable split", details)
    raise Unstable(f"half-plane split of r={point.r} did not stabilize", details)


def resonance_matrix(
    t: Triple,
    r: PointLike,
    pair: Optional[RieszPair] = None,
    config: Optional[SpectralConfig] = None,
) -> ResonanceMatrix:
    """VP_lambda(r) Hermitized, with its rank and signature."""
    cfg = resolve(config)
    if pair is None:
        point = r if isinstance(r, ResonancePoint) else complex(float(r))
        pair = riesz_pair(t, point, config=cfg)
    raw = t.V.entries @ pair.P
    m = hermitian_part(raw)
    m_norm = norm(m)
    tol = cfg.tolerances.sig_tol * m_norm
    eigs = scipy.linalg.eigvalsh(m)
    grey = [e for e in eigs if tol < abs(e) <= 10 * tol]
    if grey:
        raise SignatureAmbiguous(
            f"eigenvalues {grey} of VP lie just above the signature threshold {tol:.3e}",
            {"eigenvalues": [float(e) for e in grey], "threshold": tol},
        )
    pos, neg, _ = signature_counts(eigs, tol)
    return ResonanceMatrix(
        M=m,
        rank=numerical_rank(m, cfg.tolerances.sig_tol).rank,
        positive=pos,
        negative=neg,
        herm_residual=norm(raw - raw.conj().T),
    )


@dataclass(frozen=True)
class IndexSignature:
    index: int
    signature: int

    @property
    def agree(self) -> bool:
        return self.index == self.signature


def index_signature_check(t: Triple, r: PointLike, config: Optional[SpectralConfig] = None) -> IndexSignature:
    cfg = resolve(config)
    point = as_point(t, r, cfg)
    report = resonance_index(t, point, config=cfg)
    matrix = resonance_matrix(t, point, config=cfg)
    return IndexSignature(index=report.index, signature=matrix.signature)


def point_indices(t: Triple, points: Sequence[ResonancePoint], config: Optional[SpectralConfig] = None) -> List[int]:
    return [resonance_index(t, p, config=config).index for p in points]
