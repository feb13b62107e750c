# -*- coding: utf-8 -*-
"""************************************************************
### Date: 08/04/2026 09:36:48
### LastEditTime: 08/04/2026 10:53:19
### FilePath: //sflow//eigenpath//branches.py
### Description: Analytic eigenvalue/eigenvector branches of H + sV through a
###              real resonance point, their orders and derivative tables.
###
**********************************************************"""
from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg
from scipy.optimize import linear_sum_assignment

from sflow.block.decomposition import BlockDecomposition, block_split
from sflow.config import SpectralConfig, resolve
from sflow.core.linalg import hermitian_part, orthonormalize
from sflow.core.resolvent import fix_phases
from sflow.eigenpath.derivatives import (
    Estimate,
    grid_indices,
    half_width,
    stencil_derivative,
    symmetric_limit,
)
from sflow.errors import BranchEntanglement, DerivativeNoise, IllConditionedEigenproblem, OrderAmbiguous
from sflow.resonance.locator import ResonancePoint, Window, resonance_points
from sflow.types import Triple

LOGGER = logging.getLogger(__name__)

MIN_OVERLAP = 0.7

_Eig = Tuple[np.ndarray, np.ndarray]


@dataclass(frozen=True, eq=False)
class DerivativeTable:
    """Eigenvalue derivatives at r, k = 0..K, with Richardson error estimates."""

    order: int
    lam_derivs: Tuple[float, ...]
    errors: Tuple[float, ...]
    threshold: float

    @property
    def leading(self) -> float:
        return self.lam_derivs[self.order]


@dataclass(frozen=True, eq=False)
class EigenBranch:
    """One analytic branch (lambda_nu(s), phi_nu(s)) through (r, lambda)."""

    index: int
    r: float
    lam: float
    step: float
    levels: int
    s_grid: np.ndarray
    lambda_of_s: np.ndarray
    phi_of_s: np.ndarray
    order: int = 0
    lam_derivs: Tuple[float, ...] = ()
    phi_derivs: Tuple[np.ndarray, ...] = ()
    eig_residual: float = 0.0
    cross_check: float = 0.0

    @property
    def fine_step(self) -> float:
        return self.step / 2 ** (self.levels - 1)

    @property
    def phi(self) -> np.ndarray:
        """phi_nu(r)."""
        return self.phi_derivs[0]

    @property
    def sign(self) -> int:
        """sign(lambda_nu(r + eps) - lambda) for small eps > 0."""
        return 1 if self.lam_derivs[self.order] > 0 else -1

    @property
    def u_turn(self) -> bool:
        return self.order % 2 == 0

    def samples(self, values: np.ndarray) -> Dict[int, np.ndarray]:
        idx = np.rint((self.s_grid - self.r) / self.fine_step).astype(int)
        return {int(i): v for i, v in zip(idx, values)}


# -----------------------------
# Grid
# -----------------------------


def _local_point(t: Triple, r: float, cfg: SpectralConfig) -> Tuple[ResonancePoint, List[complex]]:
    found = resonance_points(t, t.lam, Window(complex(r), 1.5), cfg)
    if not found:
        raise IllConditionedEigenproblem(f"no resonance point at r={r}", {"r": r})
    point = min(found, key=lambda p: abs(p.r - r))
    others = [p.r for p in found if p is not point]
    return point, others


def branch_step(N: int, others: Sequence[complex], r: float, config: Optional[SpectralConfig] = None) -> float:
    """Coarsest finite-difference step for branches at r of a group of size N."""
    cfg = resolve(config)
    dists = [abs(o - r) for o in others]
    s_scale = min(1.0, 0.2 * min(dists)) if dists else 1.0
    k = min(N, cfg.fd.max_order)
    return cfg.fd.deriv_eps ** (1.0 / (k + 2)) * s_scale


# -----------------------------
# Disentangling at r
# -----------------------------


def _groups(values: np.ndarray, tol: float) -> List[List[int]]:
    out: List[List[int]] = []
    for i, v in enumerate(values):
        if out and abs(v - values[out[-1][-1]]) <= tol:
            out[-1].append(i)
        else:
            out.append([i])
    return out


def _closest_columns(basis: np.ndarray, vectors: np.ndarray, count: int) -> np.ndarray:
    weight = np.sum(np.abs(basis.conj().T @ vectors) ** 2, axis=0)
    return np.sort(np.argsort(-weight)[:count])


def disentangled_basis(
    t: Triple,
    block: BlockDecomposition,
    near: _Eig,
    config: Optional[SpectralConfig] = None,
) -> np.ndarray:
    """Orthonormal basis of the lambda-eigenspace made of branch directions.

    alpha = E*VE splits the first order; degenerate alpha-groups are split by
    -X*V R V X, and what stays degenerate takes the eigenvectors at the nearest
    grid point `near` projected back onto the group.
    """
    cfg = resolve(config)
    tol = cfg.tolerances.gap_tol * t.scale
    a_vals, a_vecs = scipy.linalg.eigh(block.alpha)
    reduced = block.reduced_resolvent
    columns: List[Tuple[Tuple[float, float, float], np.ndarray]] = []
    for group in _groups(a_vals, tol):
        x = block.E @ a_vecs[:, group]
        a = float(a_vals[group[0]])
        if len(group) == 1:
            columns.append(((a, 0.0, 0.0), x[:, 0]))
            continue
        second = -hermitian_part(x.conj().T @ block.V @ reduced @ block.V @ x)
        k_vals, k_vecs = scipy.linalg.eigh(second)
        for sub in _groups(k_vals, tol):
            y = x @ k_vecs[:, sub]
            k = float(k_vals[sub[0]])
            if len(sub) == 1:
                columns.append(((a, k, 0.0), y[:, 0]))
                continue
            LOGGER.debug("degenerate group of %d branches at r=%s, using the nearest grid point", len(sub), block.r)
            w, u = near
            pick = _closest_columns(y, u, len(sub))
            z = orthonormalize(y @ (y.conj().T @ u[:, pick]))
            for col, idx in enumerate(pick):
                columns.append(((a, k, float(w[idx])), z[:, col]))
    columns.sort(key=lambda c: c[0])
    return fix_phases(np.column_stack([c[1] for c in columns]))


# -----------------------------
# Continuation
# -----------------------------


def match_step(prev: np.ndarray, spectrum: _Eig, tol: float, s: float) -> np.ndarray:
    """Continue the branch vectors `prev` to the eigenvectors in `spectrum`.

    Eigenvalues closer than `tol` form a degenerate group; inside a group the
    previous vectors are projected and Loewdin-orthonormalized.
    """
    w, u = spectrum
    m = prev.shape[1]
    pick = _closest_columns(prev, u, m)
    vals, vecs = w[pick], u[:, pick]
    groups = _groups(vals, tol)
    slots: List[int] = []
    score = np.zeros((m, m))
    for g, members in enumerate(groups):
        weight = np.sum(np.abs(vecs[:, members].conj().T @ prev) ** 2, axis=0)
        for _ in members:
            score[:, len(slots)] = weight
            slots.append(g)
    rows, cols = linear_sum_assignment(-score)
    assigned: Dict[int, List[int]] = {}
    for nu, slot in zip(rows, cols):
        assigned.setdefault(slots[slot], []).append(int(nu))
    new = np.zeros_like(prev)
    for g, branch_ids in assigned.items():
        q = vecs[:, groups[g]]
        new[:, branch_ids] = orthonormalize(q @ (q.conj().T @ prev[:, branch_ids]))
    overlaps = np.abs(np.sum(prev.conj() * new, axis=0))
    if np.any(overlaps < MIN_OVERLAP):
        raise BranchEntanglement(
            f"branch overlap {float(np.min(overlaps)):.3f} below {MIN_OVERLAP} at s={s}",
            {"s": s, "overlaps": [float(o) for o in overlaps]},
        )
    return new


def _gauge(vectors: np.ndarray, reference: np.ndarray) -> np.ndarray:
    ov = np.sum(reference.conj() * vectors, axis=0)
    phase = np.where(np.abs(ov) > 0, ov / np.abs(ov), 1.0)
    return vectors / phase[None, :]


# -----------------------------
# Orders and derivatives
# -----------------------------


def branch_order(branch: EigenBranch, scale: float = 1.0, config: Optional[SpectralConfig] = None) -> DerivativeTable:
    """Derivative table of lambda_nu at r and the order: the first k with
    |lambda^(k)| above deriv_floor·scale."""
    cfg = resolve(config)
    samples = branch.samples(branch.lambda_of_s - branch.lam)
    top = max(i for i in samples)
    k_max = min(cfg.fd.max_order, 2 * (top // 2 ** (branch.levels - 1)) - 1)
    threshold = cfg.tolerances.deriv_floor * scale
    derivs: List[float] = [0.0]
    errors: List[float] = [0.0]
    for k in range(1, k_max + 1):
        est = stencil_derivative(samples, k, branch.step, branch.levels)
        derivs.append(float(np.real(est.value)))
        errors.append(est.error)
    order = next((k for k in range(1, len(derivs)) if abs(derivs[k]) > threshold), None)
    if order is None:
        raise OrderAmbiguous(
            f"no eigenvalue derivative up to order {k_max} exceeds {threshold:.3e}",
            {"derivatives": derivs, "threshold": threshold},
        )
    grey = [k for k in range(1, order) if abs(derivs[k]) > threshold / 10]
    if grey or errors[order] > 0.5 * abs(derivs[order]):
        raise OrderAmbiguous(
            f"order {order} not separated from noise (grey derivatives {grey})",
            {"derivatives": derivs, "errors": errors, "threshold": threshold},
        )
    LOGGER.debug("branch %d at r=%s: order %d, derivative %.6g", branch.index, branch.r, order, derivs[order])
    return DerivativeTable(order=order, lam_derivs=tuple(derivs), errors=tuple(errors), threshold=threshold)


def vector_derivatives(branch: EigenBranch, count: int, config: Optional[SpectralConfig] = None) -> Tuple[np.ndarray, ...]:
    """phi^(j)(r) for j = 0..count-1."""
    cfg = resolve(config)
    samples = branch.samples(branch.phi_of_s.T)
    out = []
    for j in range(count):
        if j == 0:
            est = Estimate(value=samples[0], error=symmetric_limit(samples, branch.levels).error)
        else:
            est = stencil_derivative(samples, j, branch.step, branch.levels)
        size = max(1.0, float(np.linalg.norm(est.value)))
        if est.error > cfg.tolerances.basis_tol * size:
            raise DerivativeNoise(
                f"derivative {j} of branch {branch.index}: Richardson error {est.error:.3e}",
                {"j": j, "error": est.error, "norm": size},
            )
        out.append(np.asarray(est.value))
    return tuple(out)


# -----------------------------
# Branches
# -----------------------------


def eigen_branches(
    t: Triple,
    r: float,
    step: Optional[float] = None,
    config: Optional[SpectralConfig] = None,
) -> List[EigenBranch]:
    """The m analytic branches of H + sV through (r, lambda), ordered by their
    first and second order splitting."""
    cfg = resolve(config)
    r = float(np.real(r))
    point, others = _local_point(t, r, cfg)
    n_group = point.algebraic_mult
    if step is None:
        step = branch_step(n_group, others, r, cfg)
    levels = cfg.fd.richardson_levels
    p = half_width(min(n_group, cfg.fd.max_order))
    fine = step / 2 ** (levels - 1)
    indices = grid_indices(p, levels)

    block = block_split(t, r, cfg)
    spectra: Dict[int, _Eig] = {i: scipy.linalg.eigh(t.operator_at(r + i * fine).entries) for i in indices if i != 0}
    reference = disentangled_basis(t, block, spectra[1], cfg)
    m = reference.shape[1]
    # only numerically coincident eigenvalues are treated as one degenerate group
    tol = 1e3 * np.finfo(float).eps * t.scale

    phis: Dict[int, np.ndarray] = {}
    for side in (1, -1):
        prev = reference
        for i in sorted(j for j in indices if j > 0):
            cur = _gauge(match_step(prev, spectra[side * i], tol, r + side * i * fine), reference)
            phis[side * i] = cur
            prev = cur
    centre = symmetric_limit(phis, levels).value
    phis[0] = _gauge(orthonormalize(centre), reference)

    s_grid = np.array([r + i * fine for i in indices])
    branches = []
    for nu in range(m):
        vecs = np.column_stack([phis[i][:, nu] for i in indices])
        lam_s = np.array(
            [float(np.real(np.vdot(v, t.operator_at(s).entries @ v))) for v, s in zip(vecs.T, s_grid)]
        )
        lam_s[indices.index(0)] = t.lam
        resid = max(
            float(np.linalg.norm(t.operator_at(s).entries @ v - l * v))
            for v, s, l in zip(vecs.T, s_grid, lam_s)
        )
        if resid > cfg.tolerances.eig_tol * t.scale:
            LOGGER.warning("branch %d at r=%s: eigen-equation residual %.3e", nu, r, resid)
        branch = EigenBranch(
            index=nu,
            r=r,
            lam=t.lam,
            step=step,
            levels=levels,
            s_grid=s_grid,
            lambda_of_s=lam_s,
            phi_of_s=vecs,
            eig_residual=resid,
        )
        table = branch_order(branch, t.scale, cfg)
        derivs = vector_derivatives(branch, table.order, cfg)
        v_phi = t.V.entries @ derivs[-1]
        cross = abs(complex(np.vdot(derivs[0], v_phi)) - table.leading / table.order)
        branches.append(
            replace(
                branch,
                order=table.order,
                lam_derivs=table.lam_derivs,
                phi_derivs=derivs,
                cross_check=float(cross),
            )
        )
    LOGGER.debug("r=%s: %d branches of orders %s", r, m, [b.order for b in branches])
    return branches


def branches_to_csv(branches: Sequence[EigenBranch]) -> str:
    """Rows s, nu, lambda_nu(s)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["s", "branch", "lambda"])
    for b in branches:
        for s, lam in zip(b.s_grid, b.lambda_of_s):
            writer.writerow([repr(float(s)), b.index, repr(float(lam))])
    return buf.getvalue()
