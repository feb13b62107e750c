# -*- coding: utf-8 -*-
"""************************************************************
### Date: 09/26/2026 20:07:11
### LastEditTime: 09/26/2026 22:24:42
### FilePath: //sflow//flow//ssf.py
### Description: Spectral shift at lambda as the Poisson integral
###              (1/pi) int Tr(V Im R_{lambda+iy}(H_r)) dr, extrapolated to y -> 0.
###
**********************************************************"""
from __future__ import annotations

import functools
import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from sflow.config import QuadratureSettings, SpectralConfig, resolve
from sflow.errors import QuadratureNotConverged
from sflow.flow.engines import segment_points
from sflow.types import OperatorPath, Triple

LOGGER = logging.getLogger(__name__)

# panels are graded out to this many y around each crossing
_GRADING_REACH = 10.0
_REL_TOL = 1e-7


@functools.lru_cache(maxsize=8)
def _gauss(order: int) -> Tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(order)


def poisson_integrand(t: Triple, r: np.ndarray, y: float) -> np.ndarray:
    """(1/pi) sum_k <phi_k, V phi_k> y / ((mu_k - lambda)^2 + y^2) at every r."""
    r = np.asarray(r, dtype=float)
    V = t.V.entries
    mats = t.H.entries[None, :, :] + r[:, None, None] * V[None, :, :]
    w, u = np.linalg.eigh(mats)
    weights = np.einsum("kil,ij,kjl->kl", u.conj(), V, u).real
    return np.sum(weights * y / ((w - t.lam) ** 2 + y**2), axis=1) / math.pi


@dataclass
class _Counter:
    evaluations: int = 0
    panels: int = 0
    depth: int = 0


def _rule(t: Triple, a: float, b: float, y: float, order: int, counter: _Counter) -> float:
    x, w = _gauss(order)
    half = 0.5 * (b - a)
    nodes = a + half * (x + 1.0)
    counter.evaluations += order
    return half * float(np.dot(w, poisson_integrand(t, nodes, y)))


def _adaptive(t: Triple, a: float, b: float, y: float, quad: QuadratureSettings, counter: _Counter) -> float:
    """Bisect until the n- and 2n-point Gauss-Legendre rules agree."""
    n = quad.gauss_order
    total = 0.0
    stack = [(a, b, 0)]
    while stack:
        lo, hi, depth = stack.pop()
        coarse = _rule(t, lo, hi, y, n, counter)
        fine = _rule(t, lo, hi, y, 2 * n, counter)
        if abs(fine - coarse) <= max(quad.abs_tol * (hi - lo), _REL_TOL * abs(fine)):
            total += fine
            counter.panels += 1
            counter.depth = max(counter.depth, depth)
            continue
        if depth >= quad.max_depth:
            raise QuadratureNotConverged(
                f"panel [{lo:.6g}, {hi:.6g}] did not converge at y={y:.3e}",
                {"a": lo, "b": hi, "y": y, "difference": abs(fine - coarse)},
            )
        mid = 0.5 * (lo + hi)
        stack.append((mid, hi, depth + 1))
        stack.append((lo, mid, depth + 1))
    return total


def graded_breaks(points: Sequence[float], y: float, base_panels: int) -> np.ndarray:
    """Uniform breaks on [0, 1], steps of y within _GRADING_REACH y of each
    point and dyadic breaks p +- y 2^k beyond."""
    breaks = set(np.linspace(0.0, 1.0, base_panels + 1).tolist())
    for p in points:
        near = p + y * np.arange(-_GRADING_REACH, _GRADING_REACH + 1)
        far = _GRADING_REACH * y * 2.0 ** np.arange(1, 64)
        far = far[far < 1.0]
        for x in np.concatenate([near, p - far, p + far]):
            if 0.0 < x < 1.0:
                breaks.add(float(x))
    return np.array(sorted(breaks))


def segment_integral(
    t: Triple,
    points: Sequence[float],
    y: float,
    quad: QuadratureSettings,
    counter: Optional[_Counter] = None,
) -> float:
    counter = _Counter() if counter is None else counter
    breaks = graded_breaks(points, y, quad.base_panels)
    return sum(_adaptive(t, float(a), float(b), y, quad, counter) for a, b in zip(breaks[:-1], breaks[1:]))


@dataclass(frozen=True)
class SsfResult:
    value: float
    by_y: Tuple[Tuple[float, float], ...]
    evaluations: int
    panels: int
    depth: int


def path_scale(path: OperatorPath) -> float:
    return max(1.0 + path.vertices[j].norm + path.direction(j).norm for j in range(path.n_segments))


def ssf_poisson(
    path: OperatorPath,
    lam: float,
    y_schedule: Optional[Sequence[float]] = None,
    quad: Optional[QuadratureSettings] = None,
    config: Optional[SpectralConfig] = None,
) -> SsfResult:
    """xi_y at y_min and 2 y_min, Richardson-extrapolated as 2 xi(y_min) - xi(2 y_min)."""
    cfg = resolve(config)
    quad = cfg.quadrature if quad is None else quad
    schedule = cfg.schedules.y_schedule if y_schedule is None else tuple(y_schedule)
    y_min = schedule[-1] * path_scale(path)

    crossings: Dict[int, List[float]] = {j: [] for j in range(path.n_segments)}
    for j, p in segment_points(path, lam, cfg):
        crossings[j].append(p.real)

    counter = _Counter()
    by_y = []
    for y in (2 * y_min, y_min):
        xi = sum(segment_integral(path.segment(j, lam), crossings[j], y, quad, counter) for j in crossings)
        LOGGER.debug("xi_y(%.3e) = %.12f", y, xi)
        by_y.append((y, xi))
    value = 2 * by_y[1][1] - by_y[0][1]
    LOGGER.debug("ssf %.12f from %d evaluations, max depth %d", value, counter.evaluations, counter.depth)
    return SsfResult(
        value=value,
        by_y=tuple(by_y),
        evaluations=counter.evaluations,
        panels=counter.panels,
        depth=counter.depth,
    )
