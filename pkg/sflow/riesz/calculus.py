# -*- coding: utf-8 -*-
"""************************************************************
### Date: 09/08/2026 17:04:32
### LastEditTime: 09/08/2026 19:21:03
### FilePath: //sflow//riesz//calculus.py
### Description: Contour moments of A_z(s) around a resonance point: the
###              idempotent P, the nilpotent A, the adjoint idempotent Q, the
###              Jordan profile and the resonance vector spaces.
###
**********************************************************"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from sflow.config import SpectralConfig, resolve
from sflow.core.linalg import (
    inclusion_residual,
    matrix_power,
    max_principal_angle,
    norm,
    null_basis,
    numerical_rank,
    range_basis,
)
from sflow.core.resolvent import a_operator, a_operator_batch
from sflow.errors import ContourCrossesPole, QuadratureNotConverged, SDependence
from sflow.resonance.locator import ResonancePoint, Window, resonance_points
from sflow.types import Triple

LOGGER = logging.getLogger(__name__)

PointLike = Union[ResonancePoint, complex, float]

# disc searched for neighbours when choosing the contour radius
_NEIGHBOUR_WINDOW = 1.5


@dataclass(frozen=True)
class RieszResiduals:
    """Quality record of a contour pair; all norms are spectral norms."""

    idem: float
    commute: float
    nilp: float
    reduce: float
    vp_qv: float
    trace_defect: float

    def within(self, tol: float, p_norm: float) -> bool:
        return (
            self.idem <= tol * max(1.0, p_norm)
            and self.commute <= tol * max(1.0, p_norm)
            and self.reduce <= tol * max(1.0, p_norm)
        )


@dataclass(frozen=True, eq=False)
class RieszPair:
    """P_z(r), its nilpotent companion and the adjoint idempotent Q."""

    r: complex
    z: complex
    P: np.ndarray
    A_nilpotent: np.ndarray
    Q: np.ndarray
    holomorphic: np.ndarray
    order: int
    rank: int
    residuals: RieszResiduals
    radius: float
    nodes: int

    @property
    def dim(self) -> int:
        return self.P.shape[0]

    def power(self, k: int) -> np.ndarray:
        """A^k P, with A^0 P = P."""
        return matrix_power(self.A_nilpotent, k) @ self.P

    @property
    def rank_reference(self) -> float:
        return max(1.0, norm(self.P), norm(self.A_nilpotent))


@dataclass(frozen=True)
class JordanProfile:
    N: int
    m: int
    sizes: Tuple[int, ...]

    @property
    def d(self) -> int:
        return self.sizes[0] if self.sizes else 0


# -----------------------------
# Contour geometry
# -----------------------------


def _point_value(point: PointLike) -> complex:
    if isinstance(point, ResonancePoint):
        return point.r
    return complex(point)


def neighbour_points(
    t: Triple, z: complex, r: complex, config: Optional[SpectralConfig] = None
) -> List[complex]:
    """Resonance points of z near r other than r itself."""
    cfg = resolve(config)
    found = resonance_points(t, z, Window(r, _NEIGHBOUR_WINDOW), cfg)
    merge = 10 * cfg.tolerances.cluster_radius * (1.0 + abs(r))
    return [p.r for p in found if abs(p.r - r) > merge]


def contour_radius(r: complex, others: Sequence[complex], config: Optional[SpectralConfig] = None) -> float:
    cfg = resolve(config)
    dists = [abs(o - r) for o in others]
    if not dists:
        return cfg.contour.radius_cap
    return min(cfg.contour.radius_factor * min(dists), cfg.contour.radius_cap)


def _check_contour(r: complex, radius: float, others: Sequence[complex]) -> None:
    for o in others:
        if abs(o - r) <= 1.05 * radius:
            raise ContourCrossesPole(
                f"resonance point {o} lies within the contour of radius {radius} around {r}",
                {"r": complex(r), "other": complex(o), "radius": radius},
            )


def contour_nodes(r: complex, radius: float, n: int) -> np.ndarray:
    k = np.arange(n)
    return r + radius * np.exp(2j * np.pi * k / n)


def contour_moments(
    t: Triple,
    z: complex,
    r: complex,
    radius: float,
    n: int,
    powers: Sequence[int] = (0, 1, 2),
    config: Optional[SpectralConfig] = None,
) -> List[np.ndarray]:
    """(1/2 pi i) of the contour integral of A_z(s)(s - r)^(p - 1) for each p.

    p = 1 gives P, p = 2 the nilpotent, p = 0 the regular part at r.
    """
    s = contour_nodes(r, radius, n)
    a = a_operator_batch(t, z, s, config)
    # ds = i (s - r) dtheta, so the weights are (s - r)^p / n
    u = s - r
    return [np.tensordot(u**p, a, axes=(0, 0)) / n for p in powers]


# -----------------------------
# Pairs
# -----------------------------


def _converged_moments(
    t: Triple, z: complex, r: complex, radius: float, cfg: SpectralConfig
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, int]:
    n = cfg.contour.nodes
    tol = cfg.tolerances.riesz_tol
    while True:
        s = contour_nodes(r, radius, 2 * n)
        a = a_operator_batch(t, z, s, cfg)
        u = s - r
        fine = [np.tensordot(u**p, a, axes=(0, 0)) / (2 * n) for p in (0, 1, 2)]
        coarse_p = np.tensordot(u[::2], a[::2], axes=(0, 0)) / n
        p = fine[1]
        scale = max(1.0, norm(p))
        change = norm(p - coarse_p)
        idem = norm(p @ p - p)
        LOGGER.debug("contour r=%s nodes=%d change=%.3e idem=%.3e", r, 2 * n, change, idem)
        if change <= tol * scale and idem <= tol * scale:
            return fine[0], fine[1], fine[2], 2 * n
        if 2 * n >= cfg.contour.max_nodes:
            raise QuadratureNotConverged(
                f"Riesz projection at r={r} did not settle with {2 * n} nodes",
                {"nodes": 2 * n, "change": change, "idem": idem, "tol": tol * scale},
            )
        n *= 2


def nilpotency_order(a_nil: np.ndarray, p: np.ndarray, config: Optional[SpectralConfig] = None) -> int:
    """Smallest d with rank(A^d P) = 0."""
    cfg = resolve(config)
    ref = max(1.0, norm(p), norm(a_nil))
    power = p
    for d in range(0, p.shape[0] + 1):
        if numerical_rank(power, cfg.tolerances.rank_tol, reference=ref).rank == 0:
            return d
        power = a_nil @ power
    return p.shape[0]


def riesz_pair(
    t: Triple,
    point: PointLike,
    z: Optional[complex] = None,
    radius: Optional[float] = None,
    config: Optional[SpectralConfig] = None,
) -> RieszPair:
    """Contour pair (P, A, Q) of the resonance point `point` for spectral value z."""
    cfg = resolve(config)
    z = t.lam if z is None else complex(z)
    r = _point_value(point)
    others = neighbour_points(t, z, r, cfg)
    if radius is None:
        radius = contour_radius(r, others, cfg)
    _check_contour(r, radius, others)

    hol, p, a_nil, nodes = _converged_moments(t, z, r, radius, cfg)
    if complex(z).imag == 0.0 and r.imag == 0.0:
        q = p.conj().T
    else:
        _, p_bar, _, _ = _converged_moments(t, np.conj(z), np.conj(r), radius, cfg)
        q = p_bar.conj().T

    order = nilpotency_order(a_nil, p, cfg)
    rank = numerical_rank(p, cfg.tolerances.rank_tol).rank
    v = t.V.entries
    residuals = RieszResiduals(
        idem=norm(p @ p - p),
        commute=norm(p @ a_nil - a_nil @ p),
        nilp=norm(matrix_power(a_nil, order)),
        reduce=norm(p @ a_nil - a_nil),
        vp_qv=norm(v @ p - q @ v),
        trace_defect=abs(complex(np.trace(p)) - rank),
    )
    if isinstance(point, ResonancePoint) and point.algebraic_mult != rank:
        LOGGER.warning(
            "rank of P (%d) differs from the clustered multiplicity (%d) at r=%s",
            rank,
            point.algebraic_mult,
            r,
        )
    return RieszPair(
        r=r,
        z=complex(z),
        P=p,
        A_nilpotent=a_nil,
        Q=q,
        holomorphic=hol,
        order=order,
        rank=rank,
        residuals=residuals,
        radius=float(radius),
        nodes=nodes,
    )


def local_projection(
    t: Triple, z: complex, r: complex, radius: float, config: Optional[SpectralConfig] = None
) -> Tuple[np.ndarray, np.ndarray]:
    """(P_z(r), A) on a contour of the given radius; the caller keeps other
    resonance points outside it."""
    cfg = resolve(config)
    _, p, a_nil, _ = _converged_moments(t, complex(z), complex(r), radius, cfg)
    return p, a_nil


def holomorphic_part(
    t: Triple, point: PointLike, z: Optional[complex] = None, config: Optional[SpectralConfig] = None
) -> np.ndarray:
    """Constant term of the Laurent expansion of A_z(s) at r."""
    return riesz_pair(t, point, z, config=config).holomorphic


def jordan_profile(rp: RieszPair, config: Optional[SpectralConfig] = None) -> JordanProfile:
    """Block sizes from the rank staircase of A^k P."""
    cfg = resolve(config)
    ref = rp.rank_reference
    ranks = [
        numerical_rank(rp.power(k), cfg.tolerances.rank_tol, reference=ref, strict=True).rank
        for k in range(rp.order + 2)
    ]
    # at_least[k] = number of blocks of size >= k + 1
    at_least = [ranks[k] - ranks[k + 1] for k in range(len(ranks) - 1)]
    sizes: List[int] = []
    for k in range(len(at_least) - 1, -1, -1):
        exact = at_least[k] - (at_least[k + 1] if k + 1 < len(at_least) else 0)
        sizes.extend([k + 1] * exact)
    return JordanProfile(N=ranks[0], m=at_least[0] if at_least else 0, sizes=tuple(sizes))


# -----------------------------
# Resonance vector spaces
# -----------------------------


def _resonance_operator(t: Triple, z: complex, r: complex, s: complex, k: int, cfg: SpectralConfig) -> np.ndarray:
    a = a_operator(t, z, s, cfg)
    step = np.eye(t.dim) + (r - s) * a
    return matrix_power(step, k)


def _probe_offsets(radius: float) -> Tuple[complex, complex]:
    return (0.5 * radius * np.exp(1j * np.pi / 3), 0.7 * radius * np.exp(4j * np.pi / 3))


def resonance_space(
    t: Triple,
    point: PointLike,
    k: int,
    z: Optional[complex] = None,
    radius: Optional[float] = None,
    config: Optional[SpectralConfig] = None,
) -> np.ndarray:
    """Orthonormal basis of the order-k resonance vectors at r."""
    cfg = resolve(config)
    z = t.lam if z is None else complex(z)
    r = _point_value(point)
    if radius is None:
        radius = contour_radius(r, neighbour_points(t, z, r, cfg), cfg)
    first, second = (r + off for off in _probe_offsets(radius))
    op1 = _resonance_operator(t, z, r, first, k, cfg)
    op2 = _resonance_operator(t, z, r, second, k, cfg)
    basis1 = null_basis(op1, cfg.tolerances.rank_tol)
    basis2 = null_basis(op2, cfg.tolerances.rank_tol)
    angle = max_principal_angle(basis1, basis2)
    if basis1.shape[1] != basis2.shape[1] or angle > cfg.tolerances.angle_tol:
        raise SDependence(
            f"order-{k} resonance space at r={r} depends on the base point",
            {"dims": (basis1.shape[1], basis2.shape[1]), "angle": angle},
        )
    return basis1


def resonance_space_dims(
    t: Triple, rp: RieszPair, config: Optional[SpectralConfig] = None
) -> List[int]:
    """dim of the order-k spaces for k = 1..d."""
    return [
        resonance_space(t, rp.r, k, rp.z, rp.radius, config).shape[1] for k in range(1, rp.order + 1)
    ]


def reduces_orders_check(
    t: Triple, rp: RieszPair, config: Optional[SpectralConfig] = None
) -> List[float]:
    """Largest principal angle between A(order-k space) and the order-(k-1) space, k = 2..d."""
    cfg = resolve(config)
    angles = []
    for k in range(2, rp.order + 1):
        upper = resonance_space(t, rp.r, k, rp.z, rp.radius, cfg)
        lower = resonance_space(t, rp.r, k - 1, rp.z, rp.radius, cfg)
        image = range_basis(rp.A_nilpotent @ upper, cfg.tolerances.rank_tol, rp.rank_reference)
        angles.append(max(inclusion_residual(lower, image), inclusion_residual(image, lower)))
    return angles


def pair_orthogonality(pairs: Sequence[RieszPair]) -> float:
    """Largest ||P1 P2|| over distinct pairs of the same spectral value."""
    worst = 0.0
    for i, a in enumerate(pairs):
        for b in pairs[i + 1 :]:
            worst = max(worst, norm(a.P @ b.P), norm(b.P @ a.P))
    return worst
