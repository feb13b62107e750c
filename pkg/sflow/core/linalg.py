# -*- coding: utf-8 -*-
"""************************************************************
### Date: 09/17/2026 11:10:50
### LastEditTime: 09/17/2026 13:27:21
### FilePath: //sflow//core//linalg.py
### Description: Rank, null space, subspace and clustering helpers. Every rank
###              decision reports the singular-value gap it was taken across.
###
**********************************************************"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

from sflow.errors import RankAmbiguous


def norm(m: np.ndarray) -> float:
    """Spectral norm, 0 for empty arrays."""
    m = np.asarray(m)
    if m.size == 0:
        return 0.0
    if m.ndim == 1:
        return float(np.linalg.norm(m))
    return float(np.linalg.norm(m, 2))


def hermitian_part(m: np.ndarray) -> np.ndarray:
    return (m + m.conj().T) / 2


def matrix_power(m: np.ndarray, k: int) -> np.ndarray:
    if k == 0:
        return np.eye(m.shape[0], dtype=complex)
    return np.linalg.matrix_power(m, k)


# -----------------------------
# Rank decisions
# -----------------------------


@dataclass(frozen=True)
class RankDecision:
    """Numerical rank with the singular values on either side of the cut."""

    rank: int
    threshold: float
    below: float
    above: float

    @property
    def ambiguous(self) -> bool:
        return self.above < 10 * self.threshold or self.below > self.threshold / 10


def numerical_rank(
    m: np.ndarray,
    rel_tol: float,
    reference: Optional[float] = None,
    strict: bool = False,
) -> RankDecision:
    """Count singular values above rel_tol·max(1, reference).

    `reference` defaults to the largest singular value of `m`. With `strict` a
    singular value within a factor 10 of the threshold raises RankAmbiguous.
    """
    m = np.atleast_2d(np.asarray(m))
    if m.size == 0:
        return RankDecision(0, rel_tol, 0.0, math.inf)
    sv = scipy.linalg.svdvals(m)
    ref = max(1.0, float(sv[0]) if reference is None else float(reference))
    threshold = rel_tol * ref
    rank = int(np.sum(sv > threshold))
    below = float(sv[rank]) if rank < sv.size else 0.0
    above = float(sv[rank - 1]) if rank > 0 else math.inf
    decision = RankDecision(rank, threshold, below, above)
    if strict and decision.ambiguous:
        raise RankAmbiguous(
            f"singular values {below:.3e}/{above:.3e} straddle threshold {threshold:.3e}",
            {"threshold": threshold, "below": below, "above": above},
        )
    return decision


def range_basis(m: np.ndarray, rel_tol: float, reference: Optional[float] = None) -> np.ndarray:
    """Orthonormal basis of the numerical range (columns)."""
    m = np.atleast_2d(np.asarray(m, dtype=complex))
    if m.size == 0:
        return np.zeros((m.shape[0], 0), dtype=complex)
    u, sv, _ = scipy.linalg.svd(m, full_matrices=False)
    ref = max(1.0, float(sv[0]) if reference is None else float(reference))
    rank = int(np.sum(sv > rel_tol * ref))
    return u[:, :rank]


def null_basis(m: np.ndarray, rel_tol: float, reference: Optional[float] = None) -> np.ndarray:
    """Orthonormal basis of the numerical kernel (columns)."""
    m = np.atleast_2d(np.asarray(m, dtype=complex))
    _, sv, vh = scipy.linalg.svd(m, full_matrices=True)
    top = float(sv[0]) if sv.size else 0.0
    ref = max(1.0, top if reference is None else float(reference))
    rank = int(np.sum(sv > rel_tol * ref))
    return vh[rank:].conj().T


def random_hermitian(dim: int, rng: np.random.Generator, complex_entries: bool = True) -> np.ndarray:
    """(M + M*)/2 with entries of M uniform in [-1, 1] (real and imaginary parts)."""
    m = rng.uniform(-1, 1, (dim, dim))
    if complex_entries:
        m = m + 1j * rng.uniform(-1, 1, (dim, dim))
    return (m + m.conj().T) / 2


def orthonormalize(m: np.ndarray) -> np.ndarray:
    """Loewdin (polar) orthonormalization of the columns."""
    u, _, vh = scipy.linalg.svd(np.asarray(m, dtype=complex), full_matrices=False)
    return u @ vh


def orthogonal_complement(basis: np.ndarray) -> np.ndarray:
    n = basis.shape[0]
    if basis.shape[1] == 0:
        return np.eye(n, dtype=complex)
    return scipy.linalg.null_space(basis.conj().T)


# -----------------------------
# Subspaces
# -----------------------------


def inclusion_residual(basis: np.ndarray, vectors: np.ndarray) -> float:
    """Relative size of the part of `vectors` outside span(basis)."""
    x = np.asarray(vectors, dtype=complex)
    if x.ndim == 1:
        x = x.reshape(-1, 1)
    scale = norm(x)
    if scale == 0.0:
        return 0.0
    if basis.shape[1] == 0:
        return 1.0
    q = orthonormalize(basis)
    return norm(x - q @ (q.conj().T @ x)) / scale


def max_principal_angle(a: np.ndarray, b: np.ndarray) -> float:
    if a.shape[1] != b.shape[1]:
        return math.pi / 2
    if a.shape[1] == 0:
        return 0.0
    return float(np.max(scipy.linalg.subspace_angles(a, b)))


def signature_counts(eigenvalues: Sequence[float], tol: float) -> Tuple[int, int, int]:
    """(positive, negative, near-zero) counts."""
    e = np.asarray(eigenvalues, dtype=float)
    pos = int(np.sum(e > tol))
    neg = int(np.sum(e < -tol))
    return pos, neg, int(e.size - pos - neg)


# -----------------------------
# Clustering
# -----------------------------


def cluster_points(points: Sequence[complex], radius: Callable[[complex], float]) -> List[List[int]]:
    """Single-link clusters of complex points; two points join when their
    distance is below the radius evaluated at either of them."""
    pts = np.asarray(points, dtype=complex)
    n = pts.size
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(pts[i] - pts[j]) <= max(radius(pts[i]), radius(pts[j])):
                parent[find(i)] = find(j)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    # deterministic order: by real part then imaginary part of the centroid
    clusters = list(groups.values())
    clusters.sort(key=lambda g: (round(float(np.mean(pts[g].real)), 12), float(np.mean(pts[g].imag))))
    return clusters
