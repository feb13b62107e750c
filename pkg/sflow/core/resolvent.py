# -*- coding: utf-8 -*-
"""************************************************************
### Date: 10/24/2026 16:23:19
### LastEditTime: 10/24/2026 19:40:50
### FilePath: //sflow//core//resolvent.py
### Description: Eigensolver contract, resolvent products A_z(s), B_z(s) and
###              spectral counting.
###
**********************************************************"""
from __future__ import annotations

import logging
from typing import Optional, Sequence, Union

import numpy as np
import scipy.linalg

from sflow.config import SpectralConfig, resolve
from sflow.errors import ResolventSingular, ThresholdTooClose
from sflow.types import HermitianOperator, Spectrum, Triple

LOGGER = logging.getLogger(__name__)

MatrixLike = Union[HermitianOperator, np.ndarray]


def _as_hermitian(H: MatrixLike, config: SpectralConfig) -> HermitianOperator:
    if isinstance(H, HermitianOperator):
        return H
    return HermitianOperator(np.asarray(H), herm_tol=config.tolerances.herm_tol)


def fix_phases(vectors: np.ndarray) -> np.ndarray:
    """Make the largest-magnitude component of each column real positive."""
    v = np.array(vectors, dtype=complex, copy=True)
    if v.size == 0:
        return v
    idx = np.argmax(np.abs(v) - 1e-12 * np.arange(v.shape[0])[:, None], axis=0)
    lead = v[idx, np.arange(v.shape[1])]
    phase = np.where(np.abs(lead) > 0, lead / np.abs(lead), 1.0)
    return v / phase[None, :]


def eigh(H: MatrixLike, config: Optional[SpectralConfig] = None) -> Spectrum:
    """Ascending eigenvalues and orthonormal eigenvectors with a fixed phase gauge."""
    cfg = resolve(config)
    op = _as_hermitian(H, cfg)
    w, v = scipy.linalg.eigh(op.entries)
    return Spectrum(eigenvalues=np.asarray(w, dtype=float), eigenvectors=fix_phases(v))


# -----------------------------
# Resolvent products
# -----------------------------


def _shifted(t: Triple, z: complex, s: complex) -> np.ndarray:
    return t.at(s) - z * np.eye(t.dim)


def _guard(m: np.ndarray, z: complex, s: complex, cfg: SpectralConfig) -> None:
    cond = np.linalg.cond(m)
    if not np.isfinite(cond) or cond > cfg.tolerances.cond_max:
        raise ResolventSingular(
            f"H + sV - z is singular at s={s}, z={z} (cond={cond:.3e})",
            {"s": complex(s), "z": complex(z), "cond": float(cond)},
        )


def resolvent(t: Triple, z: complex, s: complex, config: Optional[SpectralConfig] = None) -> np.ndarray:
    """(H + sV - z)^{-1}."""
    cfg = resolve(config)
    m = _shifted(t, z, s)
    _guard(m, z, s, cfg)
    lu = scipy.linalg.lu_factor(m)
    return scipy.linalg.lu_solve(lu, np.eye(t.dim, dtype=complex))


def a_operator(t: Triple, z: complex, s: complex, config: Optional[SpectralConfig] = None) -> np.ndarray:
    """A_z(s) = (H + sV - z)^{-1} V."""
    cfg = resolve(config)
    m = _shifted(t, z, s)
    _guard(m, z, s, cfg)
    lu = scipy.linalg.lu_factor(m)
    return scipy.linalg.lu_solve(lu, t.V.entries.astype(complex))


def b_operator(t: Triple, z: complex, s: complex, config: Optional[SpectralConfig] = None) -> np.ndarray:
    """B_z(s) = V (H + sV - z)^{-1}."""
    cfg = resolve(config)
    m = _shifted(t, z, s)
    _guard(m, z, s, cfg)
    lu = scipy.linalg.lu_factor(m)
    # V M^{-1} = (M^{-T} V^T)^T
    return scipy.linalg.lu_solve(lu, t.V.entries.T.astype(complex), trans=1).T


def a_operator_batch(
    t: Triple,
    z: complex,
    s_values: Sequence[complex],
    config: Optional[SpectralConfig] = None,
) -> np.ndarray:
    """A_z(s_k) for a stack of coupling values; shape (K, n, n)."""
    cfg = resolve(config)
    s = np.asarray(s_values, dtype=complex)
    n = t.dim
    m = t.H.entries[None, :, :] + s[:, None, None] * t.V.entries[None, :, :] - z * np.eye(n)[None, :, :]
    cond = np.linalg.cond(m)
    bad = ~np.isfinite(cond) | (cond > cfg.tolerances.cond_max)
    if np.any(bad):
        k = int(np.argmax(bad))
        raise ResolventSingular(
            f"H + sV - z is singular at s={s[k]}, z={z}",
            {"s": complex(s[k]), "z": complex(z), "cond": float(cond[k])},
        )
    rhs = np.broadcast_to(t.V.entries.astype(complex), m.shape)
    return np.linalg.solve(m, rhs)


def second_resolvent_residual(
    t: Triple, z: complex, s: complex, r: complex, config: Optional[SpectralConfig] = None
) -> float:
    """||(1 + (s - r) A_z(r)) A_z(s) - A_z(r)|| relative to ||A_z(r)||."""
    a_s = a_operator(t, z, s, config)
    a_r = a_operator(t, z, r, config)
    lhs = (np.eye(t.dim) + (s - r) * a_r) @ a_s
    return float(np.linalg.norm(lhs - a_r, 2) / max(1.0, np.linalg.norm(a_r, 2)))


# -----------------------------
# Spectral counting
# -----------------------------


def _check_gap(H: HermitianOperator, lam: float, cfg: SpectralConfig) -> np.ndarray:
    w = scipy.linalg.eigvalsh(H.entries)
    dist = float(np.min(np.abs(w - lam)))
    if dist <= cfg.tolerances.gap_tol:
        raise ThresholdTooClose(
            f"eigenvalue within {dist:.3e} of lambda={lam}",
            {"lambda": lam, "distance": dist},
        )
    return w


def counting_above(H: MatrixLike, lam: float, config: Optional[SpectralConfig] = None) -> int:
    """Number of eigenvalues strictly above lam."""
    cfg = resolve(config)
    w = _check_gap(_as_hermitian(H, cfg), lam, cfg)
    return int(np.sum(w > lam))


def counting_below(H: MatrixLike, lam: float, config: Optional[SpectralConfig] = None) -> int:
    cfg = resolve(config)
    w = _check_gap(_as_hermitian(H, cfg), lam, cfg)
    return int(np.sum(w < lam))


def spectral_projection_above(H: MatrixLike, lam: float, config: Optional[SpectralConfig] = None) -> np.ndarray:
    """Orthogonal projection onto the eigenspaces of eigenvalues above lam."""
    cfg = resolve(config)
    op = _as_hermitian(H, cfg)
    _check_gap(op, lam, cfg)
    spec = eigh(op, cfg)
    u = spec.eigenvectors[:, spec.eigenvalues > lam]
    return u @ u.conj().T
