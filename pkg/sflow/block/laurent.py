# -*- coding: utf-8 -*-
"""************************************************************
### Date: 08/22/2026 12:39:27
### LastEditTime: 08/22/2026 13:56:58
### FilePath: //sflow//block//laurent.py
### Description: Laurent coefficients D_k of the eigenspace block of the
###              resolvent, D(s) = E* R_lambda(H_s) E, and their relations.
###
**********************************************************"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np

from sflow.block.decomposition import BlockDecomposition, block_split
from sflow.config import SpectralConfig, resolve
from sflow.core.linalg import matrix_power, norm
from sflow.core.resolvent import resolvent
from sflow.errors import ContourCrossesPole, DNotHermitian, QuadratureNotConverged
from sflow.riesz.calculus import neighbour_points, nilpotency_order, riesz_pair
from sflow.types import Triple

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class LaurentData:
    """D_k for k = -1..d-1 (index k + 1 in `D`) and the lifted Y_j = F R v D_j v* E*."""

    block: BlockDecomposition
    order: int
    D: List[np.ndarray]
    radius: float
    nodes: int

    def coefficient(self, k: int) -> np.ndarray:
        if k < -1 or k >= self.order:
            return np.zeros((self.block.m, self.block.m), dtype=complex)
        return self.D[k + 1]

    def Y(self, j: int) -> np.ndarray:
        b = self.block
        return b.F @ b.Rv @ self.coefficient(j) @ b.v.conj().T @ b.E.conj().T

    def hermitian_defects(self) -> List[float]:
        return [norm(d - d.conj().T) for d in self.D]


def schur_block(block: BlockDecomposition, s: complex) -> np.ndarray:
    """D(s) = [(s - r) alpha - (s - r)^2 v* (H_hat + (s - r) V_hat - lambda)^{-1} v]^{-1}."""
    u = s - block.r
    m = u * block.alpha
    if block.F.shape[1]:
        inner = block.H_hat + u * block.V_hat - block.lam * np.eye(block.H_hat.shape[0])
        m = m - u**2 * block.v.conj().T @ np.linalg.solve(inner, block.v)
    return np.linalg.inv(m)


def complement_poles(block: BlockDecomposition) -> List[complex]:
    """Coupling values where H_hat + (s - r) V_hat - lambda is singular."""
    if not block.F.shape[1]:
        return []
    sigma = np.linalg.eigvals(block.R_hat @ block.V_hat)
    return [block.r - 1.0 / x for x in sigma if abs(x) > 1e-12]


def _contour_radius(
    t: Triple, block: BlockDecomposition, cfg: SpectralConfig
) -> float:
    avoid = list(neighbour_points(t, t.lam, block.r, cfg)) + complement_poles(block)
    dists = [abs(p - block.r) for p in avoid]
    if not dists:
        return cfg.contour.radius_cap
    if min(dists) <= 1e-9:
        raise ContourCrossesPole(
            f"a pole of the complement block sits on r={block.r}", {"r": block.r}
        )
    return min(cfg.contour.radius_factor * min(dists), cfg.contour.radius_cap)


def _coefficients(block: BlockDecomposition, radius: float, n: int, order: int) -> List[np.ndarray]:
    theta = 2 * np.pi * np.arange(n) / n
    u = radius * np.exp(1j * theta)
    samples = np.stack([schur_block(block, block.r + x) for x in u])
    return [np.tensordot(u ** (k + 1), samples, axes=(0, 0)) / n for k in range(-1, order)]


def laurent_D(
    t: Triple,
    r: float,
    order: Optional[int] = None,
    radius: Optional[float] = None,
    config: Optional[SpectralConfig] = None,
) -> LaurentData:
    """Laurent coefficients D_{-1}..D_{d-1} of D(s) at the real resonance point r."""
    cfg = resolve(config)
    block = block_split(t, r, cfg)
    if order is None:
        rp = riesz_pair(t, r, config=cfg)
        order = nilpotency_order(rp.A_nilpotent, rp.P, cfg)
    if radius is None:
        radius = _contour_radius(t, block, cfg)
    tol = cfg.tolerances.riesz_tol
    n = cfg.contour.nodes
    while True:
        coarse = _coefficients(block, radius, n, order)
        fine = _coefficients(block, radius, 2 * n, order)
        scale = max(1.0, max(norm(d) for d in fine))
        change = max(norm(a - b) for a, b in zip(fine, coarse))
        if change <= tol * scale:
            break
        if 2 * n >= cfg.contour.max_nodes:
            raise QuadratureNotConverged(
                f"Laurent coefficients at r={r} did not settle with {2 * n} nodes",
                {"change": change, "nodes": 2 * n},
            )
        n *= 2
    for k, d in enumerate(fine, start=-1):
        defect = norm(d - d.conj().T)
        if defect > cfg.tolerances.identity_tol * max(1.0, norm(d)):
            raise DNotHermitian(f"D_{k} is not Hermitian (defect {defect:.3e})", {"k": k, "defect": defect})
    LOGGER.debug("Laurent coefficients at r=%s: order %d, %d nodes, radius %.3e", r, order, 2 * n, radius)
    return LaurentData(block=block, order=order, D=[(d + d.conj().T) / 2 for d in fine], radius=radius, nodes=2 * n)


def lemma_chain_residuals(data: LaurentData) -> Dict[int, float]:
    """||D_k alpha - delta_k0 - sum_l (-1)^l D_{k+l+1} v*(R V_hat)^l R v|| for k = -1..d-1."""
    b = data.block
    m = b.m
    g: List[np.ndarray] = []
    rv = b.Rv
    step = b.R_hat @ b.V_hat if b.F.shape[1] else np.zeros((0, 0))
    for l in range(data.order + 1):
        if b.F.shape[1]:
            g.append(b.v.conj().T @ matrix_power(step, l) @ rv)
        else:
            g.append(np.zeros((m, m), dtype=complex))
    out: Dict[int, float] = {}
    for k in range(-1, data.order):
        rhs = np.eye(m) if k == 0 else np.zeros((m, m), dtype=complex)
        for l in range(data.order):
            rhs = rhs + (-1) ** l * data.coefficient(k + l + 1) @ g[l]
        out[k] = norm(data.coefficient(k) @ b.alpha - rhs)
    return out


def schur_consistency(
    t: Triple, data: LaurentData, s_values: Sequence[complex], config: Optional[SpectralConfig] = None
) -> float:
    """Largest ||D(s) - E* R_lambda(H_s) E|| over the sample points."""
    b = data.block
    worst = 0.0
    for s in s_values:
        full = b.E.conj().T @ resolvent(t, t.lam, s, config) @ b.E
        worst = max(worst, norm(schur_block(b, s) - full) / max(1.0, norm(full)))
    return worst
