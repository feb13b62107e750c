# -*- coding: utf-8 -*-
"""************************************************************
### Date: 10/15/2026 10:17:01
### LastEditTime: 10/15/2026 13:34:32
### FilePath: //sflow//riesz//vectors.py
### Description: Order and depth of single resonance vectors, the depth-one
###              criterion and a randomized probe of its open converse.
###
**********************************************************"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from sflow.block.decomposition import block_split
from sflow.config import SpectralConfig, resolve
from sflow.core.linalg import inclusion_residual, norm, range_basis
from sflow.errors import CriterionMismatch, NotAResonanceVector
from sflow.riesz.calculus import RieszPair, resonance_space, riesz_pair
from sflow.types import Triple

LOGGER = logging.getLogger(__name__)

# a "no" verdict counts as decisive beyond this multiple of the tolerance
_DECISIVE = 1e3


def _membership_tol(cfg: SpectralConfig) -> float:
    return cfg.tolerances.angle_tol


def vector_order_depth(
    chi: np.ndarray, rp: RieszPair, t: Triple, config: Optional[SpectralConfig] = None
) -> Tuple[int, int]:
    """(order, depth) of a resonance vector."""
    cfg = resolve(config)
    chi = np.asarray(chi, dtype=complex).reshape(-1)
    tol = _membership_tol(cfg)
    order = 0
    for k in range(1, rp.order + 1):
        space = resonance_space(t, rp.r, k, rp.z, rp.radius, cfg)
        if inclusion_residual(space, chi) <= tol:
            order = k
            break
    if order == 0:
        raise NotAResonanceVector(
            f"vector is not a resonance vector of r={rp.r}",
            {"residual": inclusion_residual(range_basis(rp.P, cfg.tolerances.rank_tol), chi)},
        )
    depth = 0
    for k in range(1, rp.order):
        image = range_basis(rp.power(k), cfg.tolerances.rank_tol, rp.rank_reference)
        if image.shape[1] == 0 or inclusion_residual(image, chi) > tol:
            break
        depth = k
    return order, depth


@dataclass(frozen=True)
class DepthCriterion:
    """Both forms of the depth-one test for an eigenvector chi."""

    holds: bool
    projection_residual: float
    action_residual: float


def depth_one_criterion(
    chi: np.ndarray,
    t: Triple,
    r: float,
    rp: Optional[RieszPair] = None,
    config: Optional[SpectralConfig] = None,
) -> DepthCriterion:
    """V chi orthogonal to the eigenspace, cross-checked against A S chi = -chi."""
    cfg = resolve(config)
    tol = cfg.tolerances.identity_tol
    chi = np.asarray(chi, dtype=complex).reshape(-1)
    chi = chi / norm(chi)
    block = block_split(t, r, cfg)
    if rp is None:
        rp = riesz_pair(t, r, config=cfg)
    v_chi = t.V.entries @ chi
    projection = norm(block.E.conj().T @ v_chi) / max(norm(v_chi), 1e-300)
    action = norm(rp.A_nilpotent @ block.S @ chi + chi)
    first, second = projection <= tol, action <= tol
    if first != second:
        loser = action if first else projection
        if loser > _DECISIVE * tol:
            raise CriterionMismatch(
                "orthogonality and nilpotent-action forms of the depth-one test disagree",
                {"projection": projection, "action": action, "tol": tol},
            )
        LOGGER.warning(
            "depth-one verdicts differ inside the tolerance band (projection %.3e, action %.3e)",
            projection,
            action,
        )
    return DepthCriterion(holds=first, projection_residual=projection, action_residual=action)


@dataclass(frozen=True)
class ProbeReport:
    """Outcome of the randomized search for S chi resonant without A S chi = -chi."""

    trials: int
    resonant: int
    criterion_holds: int
    counterexamples: List[Tuple[float, float]] = field(default_factory=list)


def depth_criterion_probe(
    t: Triple,
    r: float,
    trials: int,
    rng: np.random.Generator,
    config: Optional[SpectralConfig] = None,
) -> ProbeReport:
    """Search random eigenvectors chi for S chi resonant while A S chi != -chi."""
    cfg = resolve(config)
    tol = cfg.tolerances.identity_tol
    block = block_split(t, r, cfg)
    rp = riesz_pair(t, r, config=cfg)
    image = range_basis(rp.P, cfg.tolerances.rank_tol)
    resonant = holds = 0
    hits: List[Tuple[float, float]] = []
    for _ in range(trials):
        c = rng.standard_normal(block.m) + 1j * rng.standard_normal(block.m)
        chi = block.E @ (c / np.linalg.norm(c))
        s_chi = block.S @ chi
        membership = inclusion_residual(image, s_chi)
        action = norm(rp.A_nilpotent @ s_chi + chi)
        if membership <= _membership_tol(cfg):
            resonant += 1
            if action <= tol:
                holds += 1
            else:
                hits.append((membership, action))
                LOGGER.warning("probe hit at r=%s: S chi resonant, ||A S chi + chi|| = %.3e", r, action)
    return ProbeReport(trials=trials, resonant=resonant, criterion_holds=holds, counterexamples=hits)
