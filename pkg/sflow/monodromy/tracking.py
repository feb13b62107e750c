# -*- coding: utf-8 -*-
"""************************************************************
### Date: 10/21/2026 19:38:34
### LastEditTime: 10/21/2026 22:55:05
### FilePath: //sflow//monodromy//tracking.py
### Description: Continuation of the perturbed group of a real resonance point
###              as z circles lambda, and along rays z = lambda + rho e^{i theta}.
###
**********************************************************"""
from __future__ import annotations

import csv
import io
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import linear_sum_assignment

from sflow.config import SpectralConfig, resolve
from sflow.errors import GroupCollision, GroupLeak, TrackingAmbiguous
from sflow.index.engine import PointLike, as_point
from sflow.resonance.locator import ResonancePoint, group_members, group_radius
from sflow.types import Triple

LOGGER = logging.getLogger(__name__)

_COLLISION_RETRIES = 3
_RADIAL_REFINEMENTS = 12


@dataclass(frozen=True, eq=False)
class MonodromyTrace:
    """Group positions along z(theta) = lambda + rho e^{i theta}, theta in [0, 2pi].

    Row k of `positions` holds the N tracked points at theta[k], in the order
    fixed at theta = 0. permutation[i] = j means point i ends where point j started.
    """

    r: float
    lam: float
    rho: float
    radius: float
    theta: np.ndarray
    positions: np.ndarray
    permutation: Tuple[int, ...]

    @property
    def N(self) -> int:
        return self.positions.shape[1]

    def z(self, theta: float) -> complex:
        return self.lam + self.rho * complex(math.cos(theta), math.sin(theta))

    def at(self, theta: float) -> np.ndarray:
        """Positions at a checkpoint angle (0, pi/2, pi, 3pi/2 or 2pi)."""
        k = int(np.argmin(np.abs(self.theta - theta)))
        if abs(self.theta[k] - theta) > 1e-12:
            raise TrackingAmbiguous(f"theta={theta} is not a checkpoint of the trace")
        return self.positions[k]


def separation(points: np.ndarray) -> float:
    pts = np.asarray(points)
    if pts.size < 2:
        return math.inf
    d = np.abs(pts[:, None] - pts[None, :])
    return float(np.min(d[~np.eye(pts.size, dtype=bool)]))


def assign(prev: np.ndarray, new: np.ndarray) -> Optional[np.ndarray]:
    """`new` reordered to follow `prev`, or None when a point moved more than
    half the minimal separation."""
    cost = np.abs(prev[:, None] - new[None, :])
    rows, cols = linear_sum_assignment(cost)
    ordered = new[cols[np.argsort(rows)]]
    guard = 0.5 * min(separation(prev), separation(new))
    if np.max(np.abs(ordered - prev)) >= guard:
        return None
    return ordered


def _members(t: Triple, point: ResonancePoint, z: complex, radius: float, cfg: SpectralConfig) -> np.ndarray:
    found = group_members(t, point.r, z, radius, parent_mult=point.algebraic_mult, config=cfg)
    return np.array([p.r for p in found], dtype=complex)


def _circle(t: Triple, point: ResonancePoint, rho: float, radius: float, cfg: SpectralConfig) -> MonodromyTrace:
    mcfg = cfg.monodromy
    base = 2 * math.pi / mcfg.theta_steps
    floor = 2 * math.pi / 2**mcfg.theta_min_power
    checkpoints = [k * math.pi / 2 for k in range(1, 5)]

    def z_of(th: float) -> complex:
        return t.lam + rho * complex(math.cos(th), math.sin(th))

    current = _members(t, point, z_of(0.0), radius, cfg)
    thetas, rows = [0.0], [current]
    theta, step = 0.0, base
    while theta < 2 * math.pi:
        target = min(theta + step, next(c for c in checkpoints if c > theta + 1e-15))
        moved = assign(current, _members(t, point, z_of(target), radius, cfg))
        if moved is None:
            step /= 2
            if step < floor:
                raise TrackingAmbiguous(
                    f"cannot separate the group of r={point.r} at theta={theta:.6f}",
                    {"theta": theta, "rho": rho},
                )
            continue
        theta, current = target, moved
        thetas.append(theta)
        rows.append(current)
        step = min(2 * step, base)
    start, end = rows[0], rows[-1]
    closing = assign(start, end)
    if closing is None:
        raise TrackingAmbiguous(f"final positions of the group of r={point.r} do not match the start")
    perm = tuple(int(np.argmin(np.abs(start - x))) for x in end)
    LOGGER.debug("r=%s rho=%.3e: %d steps, permutation %s", point.r, rho, len(thetas) - 1, perm)
    return MonodromyTrace(
        r=point.real,
        lam=t.lam,
        rho=rho,
        radius=radius,
        theta=np.array(thetas),
        positions=np.vstack(rows),
        permutation=perm,
    )


def track_group(
    t: Triple,
    r: PointLike,
    rho: Optional[float] = None,
    steps: Optional[int] = None,
    config: Optional[SpectralConfig] = None,
) -> MonodromyTrace:
    """Follow the N points of the group of r once around lambda."""
    cfg = resolve(config)
    if steps is not None:
        cfg = cfg.with_overrides({"monodromy": {"theta_steps": steps}})
    point = as_point(t, r, cfg)
    radius = group_radius(t, point, cfg)
    rho = cfg.monodromy.rho * t.scale if rho is None else float(rho)
    for _ in range(_COLLISION_RETRIES + 1):
        try:
            return _circle(t, point, rho, radius, cfg)
        except GroupLeak as err:
            LOGGER.warning("group of r=%s leaked at rho=%.3e (%s), shrinking", point.r, rho, err)
            rho /= 10
    raise GroupCollision(
        f"group of r={point.r} collides with other points for every tried rho",
        {"r": point.r, "rho": rho},
    )


# -----------------------------
# Rays
# -----------------------------


def radial_continuation(
    t: Triple,
    trace: MonodromyTrace,
    theta: float,
    rhos: Sequence[float],
    config: Optional[SpectralConfig] = None,
) -> List[np.ndarray]:
    """Positions along z = lambda + rho e^{i theta} for each rho in `rhos`, in
    the point order of the trace."""
    cfg = resolve(config)
    point = as_point(t, trace.r, cfg)
    ray = complex(math.cos(theta), math.sin(theta))
    start = trace.at(theta)

    def walk(rho_from: float, rho_to: float, current: np.ndarray) -> np.ndarray:
        pending = [rho_to]
        rho = rho_from
        refinements = 0
        while pending:
            target = pending[-1]
            moved = assign(current, _members(t, point, t.lam + target * ray, trace.radius, cfg))
            if moved is None:
                refinements += 1
                if refinements > _RADIAL_REFINEMENTS:
                    raise TrackingAmbiguous(f"radial continuation stalled at rho={rho:.3e}", {"rho": rho})
                pending.append(math.sqrt(rho * target))
                continue
            pending.pop()
            rho, current = target, moved
        return current

    out: List[np.ndarray] = []
    for wanted in rhos:
        current, rho = start, trace.rho
        while abs(math.log(wanted / rho)) > math.log(2.0):
            nxt = rho * (0.5 if wanted < rho else 2.0)
            current = walk(rho, nxt, current)
            rho = nxt
        if wanted != rho:
            current = walk(rho, wanted, current)
        out.append(current)
    return out


def trace_to_csv(trace: MonodromyTrace) -> str:
    """Rows theta, j, Re r_j, Im r_j."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["theta", "j", "re", "im"])
    for theta, row in zip(trace.theta, trace.positions):
        for j, x in enumerate(row):
            writer.writerow([repr(float(theta)), j, repr(float(x.real)), repr(float(x.imag))])
    return buf.getvalue()
