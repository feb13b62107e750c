# -*- coding: utf-8 -*-
"""************************************************************
### Date: 10/18/2026 19:02:46
### LastEditTime: 10/18/2026 22:19:17
### FilePath: //sflow//eigenpath//structure.py
### Description: What the branch derivatives say about P and A at a real
###              resonance point: orthogonality relations, the Jordan chain
###              basis and the reconstruction of P from the b-matrix.
###
**********************************************************"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from sflow.config import SpectralConfig, resolve
from sflow.core.linalg import inclusion_residual, norm, numerical_rank
from sflow.eigenpath.branches import EigenBranch
from sflow.errors import BMatrixSingular
from sflow.riesz.calculus import RieszPair

LOGGER = logging.getLogger(__name__)

B_COND_MAX = 1e8


def _max(values) -> float:
    return max((float(v) for v in values), default=0.0)


# -----------------------------
# Orthogonality
# -----------------------------


@dataclass(frozen=True)
class OrthogonalityReport:
    cross: float
    within: float
    along_path: float

    @property
    def worst(self) -> float:
        return max(self.cross, self.within, self.along_path)


def orthogonality_suite(branches: Sequence[EigenBranch], V: np.ndarray) -> OrthogonalityReport:
    """<V phi_mu^(j), phi_nu^(k)> for mu != nu, the within-branch zeros for
    j + k <= order - 2, and pairwise overlaps of the branch vectors on the grid."""
    V = np.asarray(V)
    cross, within = [], []
    for mu in branches:
        for nu in branches:
            for j in range(mu.order):
                v_phi = V @ mu.phi_derivs[j]
                for k in range(nu.order):
                    value = abs(complex(np.vdot(v_phi, nu.phi_derivs[k])))
                    if mu.index != nu.index:
                        cross.append(value)
                    elif j + k <= nu.order - 2:
                        within.append(value)
    along = []
    for a in branches:
        for b in branches:
            if a.index < b.index:
                along.append(np.max(np.abs(np.sum(a.phi_of_s.conj() * b.phi_of_s, axis=0))))
    return OrthogonalityReport(cross=_max(cross), within=_max(within), along_path=_max(along))


# -----------------------------
# Jordan basis from derivatives
# -----------------------------


@dataclass(frozen=True, eq=False)
class JordanBasis:
    """Columns phi_nu^(j)(r)/j!, labelled (branch, j)."""

    vectors: np.ndarray
    labels: Tuple[Tuple[int, int], ...]
    chain_residual: float
    projection_residual: float
    rank: int
    span_residual: float

    @property
    def size(self) -> int:
        return self.vectors.shape[1]


def chain_vectors(branches: Sequence[EigenBranch]) -> Tuple[np.ndarray, List[Tuple[int, int]]]:
    cols, labels = [], []
    for b in branches:
        for j in range(b.order):
            cols.append(b.phi_derivs[j] / math.factorial(j))
            labels.append((b.index, j))
    return np.column_stack(cols), labels


def chain_residual(branch: EigenBranch, A: np.ndarray) -> float:
    """max_j ||A phi^(j) - j phi^(j-1)|| over j < order, with A phi = 0 at j = 0."""
    out = 0.0
    for j in range(branch.order):
        image = A @ branch.phi_derivs[j]
        if j:
            image = image - j * branch.phi_derivs[j - 1]
        out = max(out, norm(image))
    return out


def jordan_basis(
    branches: Sequence[EigenBranch],
    pair: RieszPair,
    projections: Optional[Mapping[int, np.ndarray]] = None,
    config: Optional[SpectralConfig] = None,
) -> JordanBasis:
    """Basis of im P from branch derivatives with the A-action and projection checks.

    `projections` maps a branch index to its cycle projection; without it every
    branch is checked against P.
    """
    cfg = resolve(config)
    vectors, labels = chain_vectors(branches)
    chain = _max(chain_residual(b, pair.A_nilpotent) for b in branches)
    proj = []
    for b in branches:
        p = pair.P if projections is None else projections[b.index]
        proj.extend(norm(p @ b.phi_derivs[j] - b.phi_derivs[j]) for j in range(b.order))
    rank = numerical_rank(vectors, cfg.tolerances.basis_tol).rank
    if rank != pair.rank:
        LOGGER.warning("derivative basis has rank %d, P has rank %d", rank, pair.rank)
    return JordanBasis(
        vectors=vectors,
        labels=tuple(labels),
        chain_residual=chain,
        projection_residual=_max(proj),
        rank=rank,
        span_residual=inclusion_residual(pair.P, vectors),
    )


# -----------------------------
# P from the b-matrix
# -----------------------------


@dataclass(frozen=True, eq=False)
class Reconstruction:
    P: np.ndarray
    b: np.ndarray
    cond: float
    off_block: float
    above_skew: float
    skew_constancy: float
    hankel: float
    distance: Optional[float]


def _b_structure(b: np.ndarray, labels: Sequence[Tuple[int, int]], orders: Dict[int, int]) -> Tuple[float, ...]:
    off, above = [], []
    diagonals: Dict[Tuple[int, int], List[complex]] = {}
    for row, (mu, k) in enumerate(labels):
        for col, (nu, j) in enumerate(labels):
            value = complex(b[row, col])
            if mu != nu:
                off.append(abs(value))
            elif k + j < orders[nu] - 1:
                above.append(abs(value))
            else:
                diagonals.setdefault((nu, k + j), []).append(value)
    skew, hankel = [], []
    for (nu, total), values in diagonals.items():
        spread = max(abs(v - values[0]) for v in values)
        hankel.append(spread)
        if total == orders[nu] - 1:
            skew.append(spread)
    return _max(off), _max(above), _max(skew), _max(hankel)


def reconstruct_P(
    branches: Sequence[EigenBranch],
    V: np.ndarray,
    pair: Optional[RieszPair] = None,
) -> Reconstruction:
    """P = Phi b^{-1} (V Phi)* with Phi the derivative basis and b = (V Phi)* Phi."""
    phi, labels = chain_vectors(branches)
    psi = np.asarray(V) @ phi
    b = psi.conj().T @ phi
    cond = float(np.linalg.cond(b))
    if not np.isfinite(cond) or cond > B_COND_MAX:
        raise BMatrixSingular(f"b-matrix condition number {cond:.3e}", {"cond": cond})
    p_rec = phi @ np.linalg.solve(b, psi.conj().T)
    orders = {br.index: br.order for br in branches}
    off, above, skew, hankel = _b_structure(b, labels, orders)
    distance = None if pair is None else norm(p_rec - pair.P)
    return Reconstruction(
        P=p_rec,
        b=b,
        cond=cond,
        off_block=off,
        above_skew=above,
        skew_constancy=skew,
        hankel=hankel,
        distance=distance,
    )


# -----------------------------
# Equivalent order conditions
# -----------------------------


@dataclass(frozen=True)
class OrderConditions:
    """Three independent witnesses that a branch has order `order`."""

    order: int
    derivatives: float
    pairing: float
    chain: float
    leading: float

    def holds(self, tol: float) -> bool:
        return max(self.pairing, self.chain) <= tol and self.derivatives <= tol < abs(self.leading)


def tfae_order_check(branch: EigenBranch, V: np.ndarray, pair: RieszPair) -> OrderConditions:
    """lambda^(k) = 0 for k < d, <V phi^(j), phi> = 0 for j <= d - 2, and the
    Jordan chain relation for j <= d - 1."""
    V = np.asarray(V)
    d = branch.order
    pairing = _max(abs(complex(np.vdot(V @ branch.phi_derivs[j], branch.phi))) for j in range(d - 1))
    return OrderConditions(
        order=d,
        derivatives=_max(abs(x) for x in branch.lam_derivs[1:d]),
        pairing=pairing,
        chain=chain_residual(branch, pair.A_nilpotent),
        leading=branch.lam_derivs[d],
    )
