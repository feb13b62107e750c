# -*- coding: utf-8 -*-
"""************************************************************
### Date: 09/02/2026 17:52:56
### LastEditTime: 09/02/2026 19:09:27
### FilePath: //sflow//block//tangency.py
### Description: Resonance curve t(s) of H_r + sV + t<chi,.>chi through the
###              resonance point and the order of tangency read from it.
###
**********************************************************"""
from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional

import numpy as np
import scipy.linalg
from scipy import optimize

from sflow.errors import RootBracketFail, TangencyMismatch
from sflow.types import Triple

LOGGER = logging.getLogger(__name__)

_CANDIDATES = 3
_MAX_EXPANSIONS = 200


def default_s_grid(points: int = 9) -> np.ndarray:
    """Two decades of |s| on both sides of 0."""
    mags = np.logspace(-1.5, -3.5, points)
    return np.concatenate([-mags[::-1], mags])


@dataclass(frozen=True, eq=False)
class CurveSamples:
    """t(s) on the resonance curve, plus the rank-one secular prediction."""

    s: np.ndarray
    t: np.ndarray
    secular: np.ndarray

    def secular_residual(self) -> float:
        return float(np.max(np.abs(self.t - self.secular) / np.maximum(np.abs(self.secular), 1e-300)))


def _bracket(f, direction: float, start: float, limit: float):
    a, fa = 0.0, f(0.0)
    b = direction * start
    for _ in range(_MAX_EXPANSIONS):
        fb = f(b)
        if np.sign(fb) != np.sign(fa):
            return (a, b) if a < b else (b, a)
        if abs(b) > limit:
            return None
        a, fa = b, fb
        b *= 2.0
    return None


def curve_point(
    h_s: np.ndarray,
    lam: float,
    chi: np.ndarray,
    start: float,
    limit: float,
) -> float:
    """Smallest |t| with lam in spec(h_s + t chi chi*)."""
    w0 = scipy.linalg.eigvalsh(h_s)
    order = np.argsort(np.abs(w0 - lam))[: min(_CANDIDATES, w0.size)]
    proj = np.outer(chi, chi.conj())
    roots: List[float] = []
    for k in order:

        def f(t: float, k=k) -> float:
            return float(scipy.linalg.eigvalsh(h_s + t * proj)[k] - lam)

        f0 = f(0.0)
        if f0 == 0.0:
            return 0.0
        # eigenvalues are nondecreasing in t
        bracket = _bracket(f, -np.sign(f0), start, limit)
        if bracket is None:
            continue
        width = abs(bracket[1] - bracket[0])
        res = optimize.root_scalar(f, bracket=bracket, method="brentq", xtol=1e-15 * width, rtol=4 * np.finfo(float).eps)
        if not res.converged:
            LOGGER.debug("root search for eigenvalue %d stopped: %s", k, res.flag)
            continue
        roots.append(res.root)
    if not roots:
        raise RootBracketFail("no eigenvalue branch of the rank-one pencil crosses lambda", {"start": start})
    return min(roots, key=abs)


def _secular_root(h_s: np.ndarray, lam: float, chi: np.ndarray) -> float:
    """-1 / <chi, R_lam(h_s) chi>, from the spectral decomposition of h_s."""
    w, u = scipy.linalg.eigh(h_s)
    weights = np.abs(u.conj().T @ chi) ** 2
    g = float(np.sum(weights / (w - lam)))
    return -1.0 / g if g != 0.0 else float("inf")


def trace_resonance_curve(
    t: Triple,
    r: float,
    chi: np.ndarray,
    s_grid: Optional[Iterable[float]] = None,
    order_hint: int = 1,
) -> CurveSamples:
    """Sample the curve s -> t(s) through (0, 0) in the (V, chi chi*) plane at H_r."""
    chi = np.asarray(chi, dtype=complex).reshape(-1)
    chi = chi / np.linalg.norm(chi)
    s_values = default_s_grid() if s_grid is None else np.asarray(list(s_grid), dtype=float)
    h_r = t.operator_at(r).entries
    ts, secular = [], []
    for s in s_values:
        h_s = h_r + s * t.V.entries
        start = 10.0 * abs(s) ** order_hint * t.scale
        ts.append(curve_point(h_s, t.lam, chi, start, 1e3 * t.scale))
        secular.append(_secular_root(h_s, t.lam, chi))
    return CurveSamples(s=s_values, t=np.asarray(ts), secular=np.asarray(secular))


def tangency_order(samples: CurveSamples, expected: Optional[int] = None) -> int:
    """Order of vanishing of t(s) at 0 from the log-log slope."""
    keep = (np.abs(samples.t) > 0) & (samples.s != 0)
    x = np.log(np.abs(samples.s[keep]))
    y = np.log(np.abs(samples.t[keep]))
    slope = float(np.polyfit(x, y, 1)[0])
    order = int(round(slope))
    LOGGER.debug("tangency slope %.4f -> order %d", slope, order)
    if expected is not None and order != expected:
        raise TangencyMismatch(
            f"tangency order {order} (slope {slope:.3f}) differs from direction order {expected}",
            {"slope": slope, "order": order, "expected": expected},
        )
    return order


def curve_to_csv(samples: CurveSamples) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["s", "t", "t_secular"])
    for s, tv, sec in zip(samples.s, samples.t, samples.secular):
        writer.writerow([repr(float(s)), repr(float(tv)), repr(float(sec))])
    return buf.getvalue()
