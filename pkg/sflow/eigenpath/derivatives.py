# -*- coding: utf-8 -*-
"""Central finite differences on nested stencils, Richardson-extrapolated."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

import numpy as np

Samples = Dict[int, np.ndarray]


@dataclass(frozen=True, eq=False)
class Estimate:
    """Extrapolated value and the size of the last Richardson correction."""

    value: np.ndarray
    error: float


def half_width(k: int) -> int:
    """Stencil half width used for the k-th derivative."""
    return k // 2 + 1


def leading_order(k: int) -> int:
    """Truncation order of the symmetric stencil for the k-th derivative."""
    return 4 if k % 2 == 0 else 2


@lru_cache(maxsize=None)
def fd_weights(k: int, p: int) -> Tuple[float, ...]:
    """Weights w_j, j = -p..p, with sum_j w_j f(jh) / h^k ~ f^(k)(0)."""
    nodes = np.arange(-p, p + 1, dtype=float)
    vander = np.vander(nodes, increasing=True).T
    rhs = np.zeros(2 * p + 1)
    rhs[k] = math.factorial(k)
    return tuple(np.linalg.solve(vander, rhs))


def grid_indices(p: int, levels: int) -> List[int]:
    """Integer offsets, in units of the finest step, of every stencil node."""
    out = set()
    for level in range(levels):
        stride = 2 ** (levels - 1 - level)
        out.update(j * stride for j in range(-p, p + 1))
    return sorted(out)


def richardson(values: List[np.ndarray], first_order: int, ratio: float = 2.0) -> Estimate:
    """Extrapolate a sequence computed at steps h, h/ratio, ... whose errors
    expand in even powers starting at `first_order`."""
    table = [[np.asarray(v)] for v in values]
    for i in range(1, len(values)):
        factor = ratio ** (first_order + 2 * (i - 1)) - 1.0
        for level in range(i, len(values)):
            prev = table[level][i - 1]
            coarse = table[level - 1][i - 1]
            table[level].append(prev + (prev - coarse) / factor)
    best = table[-1][-1]
    if len(values) == 1:
        return Estimate(value=best, error=float("inf"))
    err = float(np.linalg.norm(np.atleast_1d(best - table[-1][-2])))
    return Estimate(value=best, error=err)


def stencil_derivative(samples: Samples, k: int, h: float, levels: int) -> Estimate:
    """k-th derivative at offset 0 from samples keyed by finest-step index."""
    p = half_width(k)
    weights = fd_weights(k, p)
    raw = []
    for level in range(levels):
        stride = 2 ** (levels - 1 - level)
        step = h / 2**level
        acc = sum(w * samples[j * stride] for w, j in zip(weights, range(-p, p + 1)))
        raw.append(acc / step**k)
    return richardson(raw, leading_order(k))


def symmetric_limit(samples: Samples, levels: int) -> Estimate:
    """Value at offset 0 from averages over +-delta, for an analytic function."""
    raw = []
    finest = 2 ** (levels - 1)
    for level in range(levels):
        idx = finest // 2**level
        raw.append((samples[idx] + samples[-idx]) / 2)
    return richardson(raw, 2)
