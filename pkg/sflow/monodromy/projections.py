# -*- coding: utf-8 -*-
"""Cycle projections as limits of summed member projections, plus the moment,
equal-share and blow-up diagnostics on the same member data."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from sflow.config import SpectralConfig, resolve
from sflow.core.linalg import matrix_power, norm
from sflow.errors import NoConvergence
from sflow.monodromy.cycles import Cycle
from sflow.monodromy.tracking import MonodromyTrace, radial_continuation
from sflow.riesz.calculus import RieszPair, local_projection
from sflow.types import Triple

LOGGER = logging.getLogger(__name__)

MEMBER_RADIUS = 0.35
MIN_LEVELS = 4

# (r_j(z), P_z(r_j(z))) for the members of one cycle at one z
Members = Tuple[Tuple[complex, np.ndarray], ...]


@dataclass(frozen=True, eq=False)
class CycleProjection:
    """Limit of sum_j P_z(r_j(z)) over one cycle as z -> lambda along lambda + i rho."""

    cycle: Cycle
    P_nu: np.ndarray
    rhos: Tuple[float, ...]
    members: Tuple[Members, ...]
    idem: float
    commute: float
    cauchy: Tuple[float, ...]

    @property
    def levels(self) -> int:
        return len(self.rhos)


def _member_radius(points: np.ndarray, j: int, group_radius: float) -> float:
    others = [abs(points[j] - points[k]) for k in range(points.size) if k != j]
    return MEMBER_RADIUS * min(others + [group_radius])


def member_projections(
    t: Triple,
    z: complex,
    positions: np.ndarray,
    cycle: Cycle,
    group_radius: float,
    config: Optional[SpectralConfig] = None,
) -> Members:
    out = []
    for j in cycle.members:
        x = complex(positions[j])
        p, _ = local_projection(t, z, x, _member_radius(positions, j, group_radius), config)
        out.append((x, p))
    return tuple(out)


def cycle_projection(
    t: Triple,
    trace: MonodromyTrace,
    cycle: Cycle,
    pair: RieszPair,
    z_schedule: Optional[Sequence[float]] = None,
    config: Optional[SpectralConfig] = None,
) -> CycleProjection:
    """Richardson-accelerated limit of the member sums along z = lambda + i rho_k."""
    cfg = resolve(config)
    rel = cfg.schedules.z_schedule if z_schedule is None else tuple(z_schedule)
    rhos = [x * t.scale for x in rel]
    rows = radial_continuation(t, trace, math.pi / 2, rhos, cfg)
    members: List[Members] = []
    sums: List[np.ndarray] = []
    limits: List[np.ndarray] = []
    cauchy: List[float] = []
    result = None
    for rho, positions in zip(rhos, rows):
        z = t.lam + 1j * rho
        level = member_projections(t, z, positions, cycle, trace.radius, cfg)
        members.append(level)
        sums.append(sum(p for _, p in level))
        if len(sums) < 2:
            continue
        limits.append(2 * sums[-1] - sums[-2])
        if len(limits) < 2:
            continue
        cauchy.append(norm(limits[-1] - limits[-2]))
        size = max(1.0, norm(limits[-1]))
        settled = len(sums) >= MIN_LEVELS and len(cauchy) >= 2 and (
            cauchy[-1] <= cfg.tolerances.riesz_tol * size
            or (
                cauchy[-1] < cfg.monodromy.convergence_ratio * cauchy[-2]
                and cauchy[-1] <= cfg.tolerances.moment_tol * size
            )
        )
        if settled:
            result = limits[-1]
            break
    if result is None:
        raise NoConvergence(
            f"cycle projection of {cycle.members} at r={trace.r} did not settle",
            {"cauchy": cauchy},
        )
    a = pair.A_nilpotent
    LOGGER.debug("cycle %s: projection settled after %d levels", cycle.members, len(sums))
    return CycleProjection(
        cycle=cycle,
        P_nu=result,
        rhos=tuple(rhos[: len(sums)]),
        members=tuple(members),
        idem=norm(result @ result - result),
        commute=norm(a @ result - result @ a),
        cauchy=tuple(cauchy),
    )


@dataclass(frozen=True)
class PartitionReport:
    total: float
    cross: float

    def within(self, tol: float) -> bool:
        return max(self.total, self.cross) <= tol


def projection_partition(projections: Sequence[CycleProjection], pair: RieszPair) -> PartitionReport:
    """||sum_nu P^[nu] - P|| and max ||P^[nu] P^[mu]|| over nu != mu."""
    total = norm(sum(p.P_nu for p in projections) - pair.P)
    cross = 0.0
    for i, a in enumerate(projections):
        for j, b in enumerate(projections):
            if i != j:
                cross = max(cross, norm(a.P_nu @ b.P_nu))
    return PartitionReport(total=total, cross=cross)


# -----------------------------
# Diagnostics on the member data
# -----------------------------


def _moment(level: Members, r: float, k: int) -> np.ndarray:
    return sum((x - r) ** k * p for x, p in level)


def moment_limit_check(proj: CycleProjection, pair: RieszPair, k: int) -> float:
    """||sum_j (r_j - r)^k P_z(r_j) - P^[nu] A^k|| extrapolated from the two
    smallest z of the schedule."""
    r = float(np.real(pair.r))
    last, prev = proj.members[-1], proj.members[-2]
    limit = 2 * _moment(last, r, k) - _moment(prev, r, k)
    return norm(limit - proj.P_nu @ matrix_power(pair.A_nilpotent, k))


@dataclass(frozen=True)
class EqualShare:
    residual: float
    asserted: bool

    def holds(self, tol: float) -> bool:
        return not self.asserted or self.residual <= tol


def equal_share_check(proj: CycleProjection, pair: RieszPair) -> EqualShare:
    """Relative distance of (r_j - r)^{d-1} P_z(r_j) to P^[nu] A^{d-1} / d for every
    member, extrapolated in rho^{1/d}."""
    d = proj.cycle.length
    r = float(np.real(pair.r))
    target = proj.P_nu @ matrix_power(pair.A_nilpotent, d - 1) / d
    ratio = 2.0 ** (1.0 / d)
    worst = 0.0
    for (x1, p1), (x0, p0) in zip(proj.members[-1], proj.members[-2]):
        fine = (x1 - r) ** (d - 1) * p1
        coarse = (x0 - r) ** (d - 1) * p0
        limit = (ratio * fine - coarse) / (ratio - 1)
        worst = max(worst, norm(limit - target) / max(norm(target), 1e-300))
    return EqualShare(residual=worst, asserted=d <= 3)


@dataclass(frozen=True)
class BlowupRate:
    slope: float
    expected: float

    @property
    def deviation(self) -> float:
        return abs(self.slope - self.expected)


def blowup_rate(proj: CycleProjection) -> BlowupRate:
    """Slope of log max_j ||P_z(r_j)|| against log rho."""
    logs = [math.log(max(norm(p) for _, p in level)) for level in proj.members]
    slope, _ = np.polyfit(np.log(proj.rhos), logs, 1)
    d = proj.cycle.length
    return BlowupRate(slope=float(slope), expected=-(d - 1) / d)
