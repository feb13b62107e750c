# -*- coding: utf-8 -*-
"""************************************************************
### Date: 09/08/2026 14:13:29
### LastEditTime: 09/08/2026 16:30:00
### FilePath: //sflow//block//decomposition.py
### Description: 2x2 block form of (H_r, V) with respect to the lambda
###              eigenspace and its orthogonal complement.
###
**********************************************************"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
import scipy.linalg

from sflow.config import SpectralConfig, resolve
from sflow.core.linalg import hermitian_part
from sflow.core.resolvent import eigh
from sflow.errors import IllConditionedEigenproblem
from sflow.types import Triple

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BlockDecomposition:
    """Blocks in the orthonormal basis [F | E], E spanning ker(H_r - lambda).

    Compressed blocks live on the complement: H_hat = F*H_rF, V_hat = F*VF,
    v = F*VE maps the eigenspace into the complement, alpha = E*VE.
    """

    lam: float
    r: float
    E: np.ndarray
    F: np.ndarray
    H_hat: np.ndarray
    V_hat: np.ndarray
    v: np.ndarray
    alpha: np.ndarray
    R_hat: np.ndarray
    V: np.ndarray

    @property
    def m(self) -> int:
        return self.E.shape[1]

    @property
    def dim(self) -> int:
        return self.E.shape[0]

    @property
    def P_hat(self) -> np.ndarray:
        """Orthogonal projection onto the complement of the eigenspace."""
        return self.F @ self.F.conj().T

    @property
    def P_eigen(self) -> np.ndarray:
        return self.E @ self.E.conj().T

    @property
    def reduced_resolvent(self) -> np.ndarray:
        """R_lambda(H_hat) lifted to the full space, zero on the eigenspace."""
        return self.F @ self.R_hat @ self.F.conj().T

    @property
    def S(self) -> np.ndarray:
        return self.reduced_resolvent @ self.V

    @property
    def A_hat(self) -> np.ndarray:
        """R_lambda(H_hat) V_hat lifted to the full space."""
        return self.F @ self.R_hat @ self.V_hat @ self.F.conj().T

    @property
    def Rv(self) -> np.ndarray:
        """R_lambda(H_hat) v in complement coordinates, one column per eigenvector."""
        return self.R_hat @ self.v

    @property
    def basis(self) -> np.ndarray:
        return np.hstack([self.F, self.E])

    @property
    def block_V(self) -> np.ndarray:
        return np.block([[self.V_hat, self.v], [self.v.conj().T, self.alpha]])

    @property
    def block_H(self) -> np.ndarray:
        return scipy.linalg.block_diag(self.H_hat, self.lam * np.eye(self.m))

    def reassembled(self) -> Tuple[np.ndarray, np.ndarray]:
        """(H_r, V) rebuilt from the blocks."""
        u = self.basis
        return u @ self.block_H @ u.conj().T, u @ self.block_V @ u.conj().T

    def regularity_margin(self) -> float:
        """min over unit chi in the eigenspace of ||V chi||."""
        ve = self.V @ self.E
        return float(scipy.linalg.svdvals(ve)[-1]) if self.m else 0.0


def eigenspace(t: Triple, r: float, config: Optional[SpectralConfig] = None) -> Tuple[np.ndarray, np.ndarray]:
    """(E, F): eigenvectors of H + rV at lambda and the remaining eigenvectors."""
    cfg = resolve(config)
    spec = eigh(t.operator_at(r), cfg)
    near = np.abs(spec.eigenvalues - t.lam) <= cfg.tolerances.mult_gap * t.scale
    if not np.any(near):
        gap = float(np.min(np.abs(spec.eigenvalues - t.lam)))
        raise IllConditionedEigenproblem(
            f"lambda={t.lam} is not an eigenvalue of H + {r} V (distance {gap:.3e})",
            {"r": r, "distance": gap},
        )
    return spec.eigenvectors[:, near], spec.eigenvectors[:, ~near]


def block_split(t: Triple, r: float, config: Optional[SpectralConfig] = None) -> BlockDecomposition:
    """Block form of H + rV and V at the real resonance point r."""
    cfg = resolve(config)
    r = float(np.real(r))
    E, F = eigenspace(t, r, cfg)
    h_r = t.operator_at(r).entries
    v = t.V.entries
    h_hat = hermitian_part(F.conj().T @ h_r @ F)
    v_hat = hermitian_part(F.conj().T @ v @ F)
    alpha = E.conj().T @ v @ E
    shifted = h_hat - t.lam * np.eye(h_hat.shape[0])
    r_hat = np.linalg.inv(shifted) if shifted.size else np.zeros((0, 0), dtype=complex)
    return BlockDecomposition(
        lam=t.lam,
        r=r,
        E=E,
        F=F,
        H_hat=h_hat,
        V_hat=v_hat,
        v=F.conj().T @ v @ E,
        alpha=hermitian_part(alpha),
        R_hat=r_hat,
        V=v,
    )
