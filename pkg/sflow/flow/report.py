# -*- coding: utf-8 -*-
"""Run the four flow engines on one path and compare them."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from sflow.config import SpectralConfig, resolve
from sflow.errors import EngineDisagreement
from sflow.flow.engines import (
    endpoint_flow,
    fredholm_flow,
    total_intersection_number,
    total_resonance_index,
)
from sflow.flow.ssf import ssf_poisson
from sflow.types import OperatorPath

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResonanceRow:
    segment: int
    r: float
    N: int
    m: int
    index: int
    intersection: int


@dataclass(frozen=True)
class FlowReport:
    tri: int
    intersection: int
    endpoint: int
    fredholm: int
    ssf: float
    resonances: Tuple[ResonanceRow, ...]
    ssf_tol: float

    @property
    def agreement(self) -> Dict[str, bool]:
        return {
            "intersection": self.intersection == self.tri,
            "endpoint": self.endpoint == self.tri,
            "fredholm": self.fredholm == self.tri,
            "ssf": abs(self.ssf - self.tri) <= self.ssf_tol,
        }

    @property
    def agree(self) -> bool:
        return all(self.agreement.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tri": self.tri,
            "intersection": self.intersection,
            "endpoint": self.endpoint,
            "fredholm": self.fredholm,
            "ssf": self.ssf,
            "resonances": [
                {
                    "segment": row.segment,
                    "r": row.r,
                    "N": row.N,
                    "m": row.m,
                    "index": row.index,
                    "intersection": row.intersection,
                }
                for row in self.resonances
            ],
            "agreement": self.agree,
            "checks": self.agreement,
        }


def flow_report(
    path: OperatorPath,
    lam: float,
    strict: bool = True,
    config: Optional[SpectralConfig] = None,
) -> FlowReport:
    """All four engines on one path. With `strict` a disagreement raises."""
    cfg = resolve(config)
    tri = total_resonance_index(path, lam, cfg)
    inter = total_intersection_number(path, lam, cfg)
    rows = tuple(
        ResonanceRow(segment=a.segment, r=a.r, N=a.N, m=a.m, index=a.value, intersection=b.value)
        for a, b in zip(tri.contributions, inter.contributions)
    )
    report = FlowReport(
        tri=tri.total,
        intersection=inter.total,
        endpoint=endpoint_flow(path, lam, cfg),
        fredholm=fredholm_flow(path, lam, config=cfg),
        ssf=ssf_poisson(path, lam, config=cfg).value,
        resonances=rows,
        ssf_tol=cfg.tolerances.ssf_tol,
    )
    LOGGER.info(
        "tri=%d intersection=%d endpoint=%d fredholm=%d ssf=%.6f",
        report.tri,
        report.intersection,
        report.endpoint,
        report.fredholm,
        report.ssf,
    )
    if strict and not report.agree:
        raise EngineDisagreement(
            f"flow engines disagree: {report.agreement}",
            {"tri": report.tri, "intersection": report.intersection, "endpoint": report.endpoint,
             "fredholm": report.fredholm, "ssf": report.ssf},
        )
    return report
