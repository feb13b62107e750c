# -*- coding: utf-8 -*-
"""************************************************************
### Date: 10/15/2026 19:26:58
### LastEditTime: 10/15/2026 22:43:29
### FilePath: //sflow//block//identities.py
### Description: Operator identities tying S, the nilpotent A and the Laurent
###              coefficients together, the A/B property diagnostics and the
###              span test for resonance vectors of a given order.
###
**********************************************************"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from sflow.block.decomposition import BlockDecomposition, block_split
from sflow.block.laurent import LaurentData, laurent_D, lemma_chain_residuals
from sflow.config import SpectralConfig, resolve
from sflow.core.linalg import inclusion_residual, matrix_power, norm, range_basis
from sflow.riesz.calculus import RieszPair, resonance_space, riesz_pair
from sflow.types import Triple

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdentityTable:
    """Residuals keyed by identity name; `relaxed` names are checked at relaxed_tol."""

    exact: Dict[str, float]
    relaxed: Dict[str, float]
    scale: float

    def failures(self, config: Optional[SpectralConfig] = None) -> List[str]:
        cfg = resolve(config)
        bad = [k for k, v in self.exact.items() if v > cfg.tolerances.identity_tol * self.scale]
        bad += [k for k, v in self.relaxed.items() if v > cfg.tolerances.relaxed_tol * self.scale]
        return bad


@dataclass(frozen=True)
class _Context:
    block: BlockDecomposition
    pair: RieszPair
    laurent: LaurentData

    @property
    def d(self) -> int:
        return self.pair.order

    def A_pow(self, j: int) -> np.ndarray:
        return self.pair.power(j)

    def lift_D(self, k: int) -> np.ndarray:
        b = self.block
        return b.E @ self.laurent.coefficient(k) @ b.E.conj().T

    def lift_v_star(self) -> np.ndarray:
        b = self.block
        return b.E @ b.v.conj().T @ b.F.conj().T

    def step_power(self, k: int) -> np.ndarray:
        """(R V_hat)^k lifted to the full space."""
        b = self.block
        if not b.F.shape[1]:
            return np.zeros((b.dim, b.dim), dtype=complex)
        return b.F @ matrix_power(b.R_hat @ b.V_hat, k) @ b.F.conj().T


def _context(t: Triple, r: float, cfg: SpectralConfig) -> _Context:
    block = block_split(t, r, cfg)
    pair = riesz_pair(t, r, config=cfg)
    laurent = laurent_D(t, r, order=pair.order, config=cfg)
    return _Context(block=block, pair=pair, laurent=laurent)


def _block21_sum(ctx: _Context, j: int) -> np.ndarray:
    """sum_k (-1)^k D_{j+k} v* (R V_hat)^k, lifted."""
    out = np.zeros((ctx.block.dim, ctx.block.dim), dtype=complex)
    vstar = ctx.lift_v_star()
    for k in range(ctx.d):
        out = out + (-1) ** k * ctx.lift_D(j + k) @ vstar @ ctx.step_power(k)
    return out


def _s_identities(ctx: _Context) -> Dict[int, float]:
    b = ctx.block
    return {j: norm(b.S @ ctx.A_pow(j) + b.P_hat @ ctx.A_pow(j - 1)) for j in range(1, ctx.d + 1)}


def identity_S_A(t: Triple, r: float, config: Optional[SpectralConfig] = None) -> Dict[int, float]:
    """||S A^j + P_hat A^{j-1}|| for j = 1..d, with A^0 = P."""
    return _s_identities(_context(t, r, resolve(config)))


def identity_table(t: Triple, r: float, config: Optional[SpectralConfig] = None) -> IdentityTable:
    """Every block identity at r as a residual."""
    cfg = resolve(config)
    ctx = _context(t, r, cfg)
    b, d = ctx.block, ctx.d
    eye = np.eye(b.dim)
    s_a = b.S @ ctx.pair.A_nilpotent
    a_hat = b.A_hat
    exact: Dict[str, float] = {f"S_A[{j}]": v for j, v in _s_identities(ctx).items()}

    if d >= 2:
        top = b.E @ ctx.laurent.coefficient(d - 1) @ b.v.conj().T @ b.F.conj().T
        exact["A_top"] = norm(ctx.A_pow(d - 1) - top)
    for j in range(d):
        block21 = b.E.conj().T @ ctx.A_pow(j) @ b.F
        formula = b.E.conj().T @ _block21_sum(ctx, j) @ b.F
        exact[f"block21[{j}]"] = norm(block21 - formula)
    for j in range(1, d):
        exact[f"A_kills_E[{j}]"] = norm(ctx.A_pow(j) @ b.E)
        exact[f"one_plus_SA[{j}]"] = norm((eye + s_a) @ ctx.A_pow(j) - _block21_sum(ctx, j))
    for k, v in lemma_chain_residuals(ctx.laurent).items():
        exact[f"lemma[{k}]"] = v

    relaxed: Dict[str, float] = {}
    vstar = ctx.lift_v_star()
    right = eye + ctx.pair.A_nilpotent @ a_hat
    for j in range(1, d):
        relaxed[f"D_v[{j}]"] = norm(ctx.lift_D(j) @ vstar - (eye + s_a) @ ctx.A_pow(j) @ right)
    relaxed["D0_v"] = norm(ctx.lift_D(0) @ vstar - ((eye + s_a) @ ctx.pair.P @ right - b.P_eigen))

    v = t.V.entries
    plus = np.zeros_like(eye, dtype=complex)
    holo = b.S.astype(complex)
    # the l = -1 term vanishes only when the complement of the eigenspace is trivial
    for l in range(-1, d):
        term = ctx.lift_D(l) @ v
        if l >= 0:
            plus = plus + (-1) ** l * matrix_power(b.S, l) @ term
        holo = holo + (-1) ** (l + 1) * matrix_power(b.S, l + 1) @ term
    relaxed["P_plus_AS"] = norm(ctx.pair.P + ctx.pair.A_nilpotent @ b.S - plus)
    relaxed["holomorphic_PS"] = norm(ctx.pair.holomorphic + ctx.pair.P @ b.S - holo)
    return IdentityTable(exact=exact, relaxed=relaxed, scale=t.scale)


# -----------------------------
# Properties A and B
# -----------------------------


@dataclass(frozen=True)
class PropertyReport:
    A: bool
    B: bool
    b_residual: float
    a_residuals: Tuple[float, ...] = field(default_factory=tuple)

    @property
    def counterexample(self) -> bool:
        """B holds while A fails."""
        return self.B and not self.A


def property_AB(t: Triple, r: float, config: Optional[SpectralConfig] = None) -> PropertyReport:
    cfg = resolve(config)
    block = block_split(t, r, cfg)
    pair = riesz_pair(t, r, config=cfg)
    tol = cfg.tolerances.identity_tol
    b_res = norm(block.P_eigen @ t.V.entries @ block.P_eigen @ pair.A_nilpotent)
    a_res = []
    for j in range(1, pair.order + 1):
        target = range_basis(pair.power(j - 1), cfg.tolerances.rank_tol, pair.rank_reference)
        image = range_basis(block.P_eigen @ pair.power(j - 1), cfg.tolerances.rank_tol, pair.rank_reference)
        a_res.append(inclusion_residual(target, image) if image.shape[1] else 0.0)
    report = PropertyReport(
        A=all(x <= cfg.tolerances.angle_tol for x in a_res),
        B=b_res <= tol * t.scale,
        b_residual=b_res,
        a_residuals=tuple(a_res),
    )
    if report.counterexample:
        LOGGER.warning("property B without property A at r=%s: residuals %s", r, a_res)
    return report


def order_k_span_check(t: Triple, r: float, k: int, config: Optional[SpectralConfig] = None) -> float:
    """P_hat chi for order-k resonance vectors chi against span{(R V_hat)^j R v : j <= k - 2}."""
    cfg = resolve(config)
    block = block_split(t, r, cfg)
    basis = resonance_space(t, r, k, config=cfg)
    projected = block.P_hat @ basis
    if k < 2 or not block.F.shape[1] or norm(projected) <= cfg.tolerances.rank_tol:
        return norm(projected)
    step = block.R_hat @ block.V_hat
    columns = [block.F @ matrix_power(step, j) @ block.Rv for j in range(k - 1)]
    span = range_basis(np.hstack(columns), cfg.tolerances.rank_tol)
    return inclusion_residual(span, projected)
