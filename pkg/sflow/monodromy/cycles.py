# -*- coding: utf-8 -*-
"""************************************************************
### Date: 08/07/2026 09:12:36
### LastEditTime: 08/07/2026 10:29:07
### FilePath: //sflow//monodromy//cycles.py
### Description: Cycles of the monodromy permutation, their signs, leading
###              Puiseux coefficients and the intersection number.
###
**********************************************************"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

from sflow.config import SpectralConfig, resolve
from sflow.eigenpath.branches import EigenBranch, eigen_branches
from sflow.errors import CycleJordanMismatch, ExponentMismatch, SignDisagreement
from sflow.index.engine import PointLike, as_point
from sflow.monodromy.tracking import MonodromyTrace, radial_continuation, track_group
from sflow.resonance.locator import group_members
from sflow.riesz.calculus import JordanProfile, jordan_profile, riesz_pair
from sflow.types import Triple

LOGGER = logging.getLogger(__name__)

EXPONENT_TOL = 0.05
# real members: |Im x| below this fraction of |x - r|
_REAL_REL = 1e-6


@dataclass(frozen=True)
class PuiseuxEstimate:
    exponent: float
    modulus: float
    side: int
    residual: float

    @property
    def coefficient(self) -> float:
        """Signed leading coefficient r_{1/d}."""
        return self.side * self.modulus


@dataclass(frozen=True)
class Cycle:
    members: Tuple[int, ...]
    sign: int = 0
    branch: Optional[int] = None
    puiseux: Optional[PuiseuxEstimate] = None

    @property
    def length(self) -> int:
        return len(self.members)

    @property
    def parity(self) -> int:
        """b = length mod 2."""
        return self.length % 2


def cycles_of(permutation: Sequence[int]) -> List[Tuple[int, ...]]:
    seen = set()
    out = []
    for start in range(len(permutation)):
        if start in seen:
            continue
        cycle = []
        i = start
        while i not in seen:
            seen.add(i)
            cycle.append(i)
            i = permutation[i]
        out.append(tuple(cycle))
    return out


def cycle_decomposition(trace: MonodromyTrace, profile: JordanProfile) -> List[Cycle]:
    """Disjoint cycles of the trace permutation; their lengths must be the Jordan sizes."""
    cycles = [Cycle(members=c) for c in cycles_of(trace.permutation)]
    lengths = sorted((c.length for c in cycles), reverse=True)
    sizes = sorted(profile.sizes, reverse=True)
    if lengths != sizes:
        raise CycleJordanMismatch(
            f"cycle lengths {lengths} differ from Jordan sizes {sizes} at r={trace.r}",
            {"cycles": lengths, "jordan": sizes},
        )
    return cycles


# -----------------------------
# Real members
# -----------------------------


def is_real_member(x: complex, r: float) -> bool:
    return abs(x.imag) <= _REAL_REL * abs(x - r) + 1e-14


def real_members(positions: np.ndarray, cycle: Cycle, r: float) -> List[complex]:
    return [complex(positions[j]) for j in cycle.members if is_real_member(complex(positions[j]), r)]


def right_member(trace: MonodromyTrace, cycle: Cycle) -> Tuple[int, complex]:
    """(side, x): the real member right of r and the side of lambda its z lies on."""
    for side, theta in ((1, 0.0), (-1, math.pi)):
        for x in real_members(trace.at(theta), cycle, trace.r):
            if x.real > trace.r:
                return side, complex(x.real)
    raise SignDisagreement(f"cycle {cycle.members} at r={trace.r} has no real member right of r")


# -----------------------------
# Signs
# -----------------------------


@dataclass(frozen=True)
class SignEvidence:
    branch: int
    branch_sign: int
    imaginary_sign: int
    side: int

    @property
    def agree(self) -> bool:
        return self.branch_sign == self.imaginary_sign == self.side


def matching_branch(t: Triple, x: float, z: float, branches: Sequence[EigenBranch]) -> int:
    """Branch whose vector at r overlaps most with the z-eigenvector of H + xV."""
    w, u = scipy.linalg.eigh(t.operator_at(x).entries)
    vec = u[:, int(np.argmin(np.abs(w - z)))]
    overlaps = [abs(complex(np.vdot(b.phi, vec))) for b in branches]
    return int(np.argmax(overlaps))


def sign_evidence(
    t: Triple,
    trace: MonodromyTrace,
    cycle: Cycle,
    branches: Sequence[EigenBranch],
    y: Optional[float] = None,
    config: Optional[SpectralConfig] = None,
) -> SignEvidence:
    cfg = resolve(config)
    side, x = right_member(trace, cycle)
    z = trace.lam + side * trace.rho
    nu = matching_branch(t, x.real, z, branches)
    y = 0.01 * trace.rho if y is None else float(y)
    moved = group_members(t, trace.r, z + 1j * y, trace.radius, parent_mult=trace.N, config=cfg)
    nearest = min((p.r for p in moved), key=lambda q: abs(q - x))
    return SignEvidence(
        branch=nu,
        branch_sign=branches[nu].sign,
        imaginary_sign=1 if nearest.imag > 0 else -1,
        side=side,
    )


def _agreed(ev: SignEvidence, cycle: Cycle, r: float) -> SignEvidence:
    if not ev.agree:
        raise SignDisagreement(
            f"cycle {cycle.members} at r={r}: branch sign {ev.branch_sign}, "
            f"imaginary sign {ev.imaginary_sign}, side {ev.side}",
            {"branch": ev.branch, "branch_sign": ev.branch_sign, "imaginary_sign": ev.imaginary_sign},
        )
    return ev


def cycle_sign(
    t: Triple,
    trace: MonodromyTrace,
    cycle: Cycle,
    branches: Optional[Sequence[EigenBranch]] = None,
    y: Optional[float] = None,
    config: Optional[SpectralConfig] = None,
) -> int:
    """sign(lambda_nu(r + eps) - lambda) checked against the half plane the real
    member moves into under z -> z + iy."""
    cfg = resolve(config)
    if branches is None:
        branches = eigen_branches(t, trace.r, config=cfg)
    return _agreed(sign_evidence(t, trace, cycle, branches, y, cfg), cycle, trace.r).branch_sign


# -----------------------------
# Puiseux
# -----------------------------


def puiseux_leading(
    t: Triple,
    trace: MonodromyTrace,
    cycle: Cycle,
    config: Optional[SpectralConfig] = None,
) -> PuiseuxEstimate:
    """Slope and intercept of log|r_j(z) - r| against log|z - lambda| on the real
    side where the cycle has a real member right of r."""
    cfg = resolve(config)
    mcfg = cfg.monodromy
    side, _ = right_member(trace, cycle)
    rhos = np.geomspace(mcfg.fit_rho_max, mcfg.fit_rho_min, mcfg.fit_points) * t.scale
    theta = 0.0 if side > 0 else math.pi
    rows = radial_continuation(t, trace, theta, list(rhos), cfg)
    logs = np.array([np.mean([math.log(abs(row[j] - trace.r)) for j in cycle.members]) for row in rows])
    slope, intercept = np.polyfit(np.log(rhos), logs, 1)
    resid = float(np.max(np.abs(np.polyval([slope, intercept], np.log(rhos)) - logs)))
    expected = 1.0 / cycle.length
    if abs(slope - expected) > EXPONENT_TOL * expected:
        raise ExponentMismatch(
            f"cycle {cycle.members} at r={trace.r}: exponent {slope:.4f}, expected {expected:.4f}",
            {"slope": float(slope), "expected": expected},
        )
    LOGGER.debug("cycle %s: exponent %.5f modulus %.6g", cycle.members, slope, math.exp(intercept))
    return PuiseuxEstimate(exponent=float(slope), modulus=math.exp(intercept), side=side, residual=resid)


# -----------------------------
# Real member property
# -----------------------------


@dataclass(frozen=True)
class RealMemberReport:
    """(count at lambda + rho, count at lambda - rho, straddles r) per cycle and radius."""

    samples: Tuple[Tuple[Tuple[int, int, bool], ...], ...]
    lengths: Tuple[int, ...]

    @property
    def holds(self) -> bool:
        for length, rows in zip(self.lengths, self.samples):
            for plus, minus, straddles in rows:
                expected = {(1, 1)} if length % 2 else {(2, 0), (0, 2)}
                if (plus, minus) not in expected or not straddles:
                    return False
        return True


def real_member_check(
    t: Triple,
    trace: MonodromyTrace,
    cycles: Sequence[Cycle],
    factors: Sequence[float] = (1.0, 0.5, 0.25),
    config: Optional[SpectralConfig] = None,
) -> RealMemberReport:
    """Real members of every cycle on a real z sweep around lambda."""
    cfg = resolve(config)
    rhos = [f * trace.rho for f in factors]
    plus_rows = radial_continuation(t, trace, 0.0, rhos, cfg)
    minus_rows = radial_continuation(t, trace, math.pi, rhos, cfg)
    samples = []
    for cycle in cycles:
        rows = []
        for plus_pos, minus_pos in zip(plus_rows, minus_rows):
            plus = real_members(plus_pos, cycle, trace.r)
            minus = real_members(minus_pos, cycle, trace.r)
            pair = plus if len(plus) == 2 else minus if len(minus) == 2 else []
            straddles = not pair or (pair[0].real - trace.r) * (pair[1].real - trace.r) < 0
            rows.append((len(plus), len(minus), straddles))
        samples.append(tuple(rows))
    return RealMemberReport(samples=tuple(samples), lengths=tuple(c.length for c in cycles))


# -----------------------------
# Whole analysis
# -----------------------------


@dataclass(frozen=True, eq=False)
class CycleAnalysis:
    r: float
    trace: MonodromyTrace
    profile: JordanProfile
    cycles: Tuple[Cycle, ...]
    branches: Tuple[EigenBranch, ...]

    @property
    def intersection_number(self) -> int:
        return sum(c.parity * c.sign for c in self.cycles)


def analyze_cycles(t: Triple, r: PointLike, config: Optional[SpectralConfig] = None) -> CycleAnalysis:
    """Trace, cycles with signs and Puiseux estimates, and the eigen branches at r."""
    cfg = resolve(config)
    point = as_point(t, r, cfg)
    trace = track_group(t, point, config=cfg)
    profile = jordan_profile(riesz_pair(t, point, config=cfg), cfg)
    cycles = cycle_decomposition(trace, profile)
    branches = eigen_branches(t, point.real, config=cfg)
    done = []
    for cycle in cycles:
        ev = _agreed(sign_evidence(t, trace, cycle, branches, config=cfg), cycle, trace.r)
        estimate = puiseux_leading(t, trace, cycle, cfg)
        done.append(replace(cycle, sign=ev.branch_sign, branch=ev.branch, puiseux=estimate))
    return CycleAnalysis(
        r=point.real,
        trace=trace,
        profile=profile,
        cycles=tuple(done),
        branches=tuple(branches),
    )


def intersection_number(t: Triple, r: PointLike, config: Optional[SpectralConfig] = None) -> int:
    """Sum of b_nu sign(nu) over the cycles at r."""
    return analyze_cycles(t, r, config).intersection_number
