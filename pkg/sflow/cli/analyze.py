# -*- coding: utf-8 -*-
"""************************************************************
### Date: 10/09/2026 10:05:25
### LastEditTime: 10/09/2026 13:22:56
### FilePath: //sflow//cli//analyze.py
### Description: Per-point analysis of one triple: location, Riesz pair,
###              Jordan sizes, index, signature, cycles, eigenpath orders,
###              block identities and tangency, with the cross-checks tying
###              them together.
###
**********************************************************"""
from __future__ import annotations

import logging
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from sflow.block.identities import identity_table
from sflow.block.tangency import tangency_order, trace_resonance_curve
from sflow.config import SpectralConfig, resolve
from sflow.eigenpath.structure import orthogonality_suite
from sflow.index.engine import resonance_index, resonance_matrix
from sflow.monodromy.cycles import CycleAnalysis, analyze_cycles
from sflow.resonance.locator import ResonancePoint, real_resonance_points_on_segment
from sflow.riesz.calculus import jordan_profile, riesz_pair
from sflow.types import Triple

LOGGER = logging.getLogger(__name__)

# orders above this are reported without the identity table
IDENTITY_MAX_ORDER = 4


def tangency_vector(analysis: CycleAnalysis) -> Tuple[np.ndarray, int]:
    """Branch vector at r of the highest-order branch, and that order."""
    best = max(analysis.branches, key=lambda b: b.order)
    return best.phi, best.order


def analyze_point(t: Triple, point: ResonancePoint, config: Optional[SpectralConfig] = None) -> Dict[str, Any]:
    cfg = resolve(config)
    tol = cfg.tolerances
    pair = riesz_pair(t, point, config=cfg)
    profile = jordan_profile(pair, cfg)
    index = resonance_index(t, point, config=cfg)
    matrix = resonance_matrix(t, point, pair=pair, config=cfg)
    analysis = analyze_cycles(t, point, cfg)
    orders = sorted((b.order for b in analysis.branches), reverse=True)
    lengths = sorted((c.length for c in analysis.cycles), reverse=True)
    chi, top = tangency_vector(analysis)
    tangency = tangency_order(trace_resonance_curve(t, point.real, chi, order_hint=top))
    ortho = orthogonality_suite(analysis.branches, t.V.entries)
    p_norm = max(1.0, float(np.linalg.norm(pair.P, 2)))

    row: Dict[str, Any] = {
        "r": point.real,
        "N": point.algebraic_mult,
        "m": profile.m,
        "d": profile.d,
        "jordan": list(profile.sizes),
        "index": index.index,
        "N_plus": index.N_plus,
        "N_minus": index.N_minus,
        "y_used": index.y_used,
        "signature": matrix.signature,
        "cycles": [
            {
                "members": list(c.members),
                "length": c.length,
                "sign": c.sign,
                "exponent": c.puiseux.exponent if c.puiseux else None,
                "coefficient": c.puiseux.coefficient if c.puiseux else None,
            }
            for c in analysis.cycles
        ],
        "intersection": analysis.intersection_number,
        "branch_orders": orders,
        "tangency": tangency,
        "riesz": {
            "idem": pair.residuals.idem,
            "nilp": pair.residuals.nilp,
            "reduce": pair.residuals.reduce,
            "trace_defect": pair.residuals.trace_defect,
            "nodes": pair.nodes,
        },
        "orthogonality": ortho.worst,
        "branch_cross_check": max(b.cross_check for b in analysis.branches),
    }
    checks = {
        "riesz_quality": pair.residuals.within(tol.riesz_tol, p_norm),
        "jordan_eq_cycles": list(profile.sizes) == lengths,
        "jordan_eq_orders": list(profile.sizes) == orders,
        "index_eq_signature": index.index == matrix.signature,
        "index_eq_intersection": index.index == analysis.intersection_number,
        "u_turn": index.u_turn_ok,
        "tangency_eq_order": tangency == top,
        "orthogonality": ortho.worst <= tol.ortho_tol * t.scale,
        "branch_cross_check": max(b.cross_check for b in analysis.branches) <= tol.basis_tol * t.scale,
    }
    if profile.d <= IDENTITY_MAX_ORDER:
        failures = identity_table(t, point.real, cfg).failures(cfg)
        row["identity_failures"] = failures
        checks["identities"] = not failures
    row["checks"] = checks
    return row


def analyze_triple(
    t: Triple,
    interval: Tuple[float, float],
    config: Optional[SpectralConfig] = None,
) -> Dict[str, Any]:
    """Report for every real resonance point of the triple inside the interval."""
    cfg = resolve(config)
    points = real_resonance_points_on_segment(t.lam, t.H, t.V, interval, cfg)
    LOGGER.info("%d real resonance points in [%g, %g]", len(points), *interval)
    rows: List[Dict[str, Any]] = [analyze_point(t, p, cfg) for p in points]
    return {
        "lambda": t.lam,
        "interval": list(interval),
        "scale": t.scale,
        "points": rows,
        "agreement": all(all(row["checks"].values()) for row in rows),
    }
