# -*- coding: utf-8 -*-
"""************************************************************
### Date: 08/01/2026 12:51:03
### LastEditTime: 08/01/2026 13:08:34
### FilePath: //sflow//resonance//locator.py
### Description: Resonance points r with lambda (or z) in spec(H + rV): roots
###              from the spectrum of A_z(s0) at a regular base point s0,
###              clustered into points with multiplicities.
###
**********************************************************"""
from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

from sflow.config import SpectralConfig, resolve
from sflow.core.linalg import cluster_points
from sflow.errors import (
    GroupLeak,
    IllConditionedEigenproblem,
    NoRegularBasePoint,
    ResonantEndpoint,
)
from sflow.types import Direction, HermitianOperator, Triple

LOGGER = logging.getLogger(__name__)

# base point offsets, as fractions of the window radius and angles in turns
_BASE_RADII = (0.15, 0.6, 1.3)
_BASE_TURNS = (0.093, 0.271, 0.418, 0.607, 0.779, 0.931)
# conditioning we prefer before falling back to cond_max
_PREFERRED_COND = 1e8
_GROUP_RADIUS_CAP = 0.25


@dataclass(frozen=True)
class Window:
    """Closed disc in the coupling plane."""

    center: complex
    radius: float

    def contains(self, r: complex) -> bool:
        return abs(r - self.center) <= self.radius

    def margin(self, r: complex) -> float:
        return abs(abs(r - self.center) - self.radius)

    @classmethod
    def around_interval(cls, a: float, b: float) -> "Window":
        return cls(center=complex((a + b) / 2), radius=1.05 * (b - a) / 2 + 1e-9)


@dataclass(frozen=True)
class ResonancePoint:
    """A coupling value r at which z is an eigenvalue of H + rV."""

    r: complex
    z: complex
    algebraic_mult: int
    geometric_mult: int
    group_id: Optional[str] = None
    unresolved: bool = False
    spread: float = field(default=0.0, compare=False)

    @property
    def is_real(self) -> bool:
        return self.r.imag == 0.0

    @property
    def real(self) -> float:
        return float(self.r.real)


@dataclass(frozen=True)
class BasePoint:
    s0: complex
    cond: float
    roots: Tuple[complex, ...]


def _cluster_radius(cfg: SpectralConfig):
    rad = cfg.tolerances.cluster_radius
    return lambda r: rad * (1.0 + abs(r))


def _roots_at(t: Triple, z: complex, s0: complex, cfg: SpectralConfig) -> Optional[BasePoint]:
    m = t.at(s0) - z * np.eye(t.dim)
    cond = float(np.linalg.cond(m))
    if not np.isfinite(cond) or cond > cfg.tolerances.cond_max:
        return None
    a = scipy.linalg.solve(m, t.V.entries.astype(complex))
    sigma = scipy.linalg.eigvals(a)
    if not np.all(np.isfinite(sigma)):
        raise IllConditionedEigenproblem(f"non-finite spectrum of A_z(s0) at s0={s0}")
    floor = cfg.tolerances.sigma_floor
    roots = tuple(complex(s0 - 1.0 / x) for x in sigma if abs(x) > floor)
    return BasePoint(s0=complex(s0), cond=cond, roots=roots)


def choose_base_point(
    t: Triple, z: complex, window: Window, config: Optional[SpectralConfig] = None
) -> BasePoint:
    """Regular s0 near the window, preferring roots far from the window boundary."""
    cfg = resolve(config)
    best: Optional[Tuple[Tuple[float, float], BasePoint]] = None
    scale = max(window.radius, 1e-6)
    for rho in _BASE_RADII:
        for turn in _BASE_TURNS:
            s0 = window.center + rho * scale * cmath.exp(2j * math.pi * turn)
            bp = _roots_at(t, z, s0, cfg)
            if bp is None:
                continue
            margin = min((window.margin(r) for r in bp.roots), default=scale) / scale
            key = (float(bp.cond <= _PREFERRED_COND), margin)
            if best is None or key > best[0]:
                best = (key, bp)
    if best is None:
        raise NoRegularBasePoint(
            f"no regular base point around {window.center} (radius {window.radius})",
            {"z": complex(z)},
        )
    LOGGER.debug("base point s0=%s cond=%.3e margin=%.3e", best[1].s0, best[1].cond, best[0][1])
    return best[1]


def _geometric_mult(t: Triple, z: complex, r: complex, cfg: SpectralConfig) -> int:
    sv = scipy.linalg.svdvals(t.at(r) - z * np.eye(t.dim))
    return int(np.sum(sv <= cfg.tolerances.mult_gap * t.scale))


def _snap_real(t: Triple, r: complex, cfg: SpectralConfig) -> complex:
    if abs(r.imag) > 1e-8 * t.scale:
        return r
    x = float(r.real)
    w = scipy.linalg.eigvalsh(t.at(x))
    dist = float(np.min(np.abs(w - t.lam)))
    if dist > max(cfg.tolerances.eig_tol, 1e-8) * t.scale:
        raise IllConditionedEigenproblem(
            f"real cluster at r={x} does not reproduce lambda (distance {dist:.3e})",
            {"r": x, "distance": dist},
        )
    return complex(x, 0.0)


def resonance_points(
    t: Triple,
    z: complex,
    window: Window,
    config: Optional[SpectralConfig] = None,
) -> List[ResonancePoint]:
    """All resonance points of (z; H, V) inside `window`, with multiplicities."""
    cfg = resolve(config)
    bp = choose_base_point(t, z, window, cfg)
    radius_of = _cluster_radius(cfg)
    roots = np.asarray(bp.roots, dtype=complex)
    clusters = cluster_points(roots, radius_of)
    z_real = complex(z).imag == 0.0

    centroids = []
    for group in clusters:
        c = complex(np.mean(roots[group]))
        if z_real:
            c = _snap_real(t, c, cfg)
        spread = float(np.max(np.abs(roots[group] - np.mean(roots[group]))))
        centroids.append((c, len(group), spread))

    points: List[ResonancePoint] = []
    for k, (c, n_alg, spread) in enumerate(centroids):
        if not window.contains(c):
            continue
        unresolved = any(
            abs(c - other) < 10 * radius_of(c) for j, (other, _, _) in enumerate(centroids) if j != k
        )
        if unresolved:
            LOGGER.warning("resonance point %s is closer than 10 cluster radii to another point", c)
        m = _geometric_mult(t, z, c, cfg)
        if m > n_alg:
            LOGGER.warning("geometric multiplicity %d exceeds algebraic %d at r=%s", m, n_alg, c)
            m = n_alg
        points.append(
            ResonancePoint(
                r=c,
                z=complex(z),
                algebraic_mult=n_alg,
                geometric_mult=max(m, 1),
                unresolved=unresolved,
                spread=spread,
            )
        )
    return points


def _check_endpoint(t: Triple, s: float, cfg: SpectralConfig) -> None:
    w = scipy.linalg.eigvalsh(t.at(s))
    dist = float(np.min(np.abs(w - t.lam)))
    if dist <= cfg.tolerances.gap_tol:
        raise ResonantEndpoint(
            f"lambda={t.lam} is within {dist:.3e} of spec(H + {s} V)",
            {"s": s, "distance": dist},
        )


def real_resonance_points_on_segment(
    lam: float,
    H: HermitianOperator,
    V: Direction,
    interval: Tuple[float, float] = (0.0, 1.0),
    config: Optional[SpectralConfig] = None,
) -> List[ResonancePoint]:
    """Real r in (a, b) with lam in spec(H + rV), ascending."""
    cfg = resolve(config)
    a, b = float(interval[0]), float(interval[1])
    t = Triple(lam, H, V)
    _check_endpoint(t, a, cfg)
    _check_endpoint(t, b, cfg)
    found = resonance_points(t, lam, Window.around_interval(a, b), cfg)
    real = [p for p in found if p.is_real and a < p.real < b]
    return sorted(real, key=lambda p: p.real)


# -----------------------------
# Groups of perturbed points
# -----------------------------


def group_id_for(r: complex) -> str:
    return f"r={complex(r).real:.12g}{complex(r).imag:+.12g}j"


def default_group_radius(r: complex, others: Sequence[complex]) -> float:
    """Half the distance to the nearest other resonance point, capped."""
    dists = [abs(complex(o) - r) for o in others if abs(complex(o) - r) > 0]
    if not dists:
        return _GROUP_RADIUS_CAP
    return min(0.5 * min(dists), _GROUP_RADIUS_CAP)


def group_radius(t: Triple, point: ResonancePoint, config: Optional[SpectralConfig] = None) -> float:
    """Default group radius of `point` among the resonance points of (lambda; H, V)."""
    cfg = resolve(config)
    nearby = resonance_points(t, t.lam, Window(point.r, 4 * _GROUP_RADIUS_CAP), cfg)
    others = [p.r for p in nearby if abs(p.r - point.r) > 10 * _cluster_radius(cfg)(point.r)]
    return default_group_radius(point.r, others)


def group_members(
    t: Triple,
    r_parent: complex,
    z: complex,
    radius: float,
    parent_mult: Optional[int] = None,
    config: Optional[SpectralConfig] = None,
) -> List[ResonancePoint]:
    """Perturbed resonance points of (z; H, V) within `radius` of r_parent.

    Members are the raw roots, each of multiplicity one; for z off the real
    axis near lambda they are simple.
    """
    cfg = resolve(config)
    best: Optional[BasePoint] = None
    for rho in (1.5, 2.0, 3.0):
        for turn in (0.0, 0.5, 0.125, 0.375, 0.625, 0.875):
            s0 = r_parent + rho * radius * cmath.exp(2j * math.pi * turn)
            bp = _roots_at(t, z, s0, cfg)
            if bp is not None and (best is None or bp.cond < best.cond):
                best = bp
        if best is not None and best.cond <= _PREFERRED_COND:
            break
    if best is None:
        raise NoRegularBasePoint(f"no regular base point near r={r_parent} for z={z}")
    gid = group_id_for(r_parent)
    members = [
        ResonancePoint(r=r, z=complex(z), algebraic_mult=1, geometric_mult=1, group_id=gid)
        for r in sorted(best.roots, key=lambda x: (x.real, x.imag))
        if abs(r - r_parent) < radius
    ]
    if parent_mult is not None and len(members) != parent_mult:
        raise GroupLeak(
            f"group of r={r_parent} at z={z} has {len(members)} members, expected {parent_mult}",
            {"members": len(members), "expected": parent_mult, "z": complex(z), "radius": radius},
        )
    return members
