# -*- coding: utf-8 -*-
"""************************************************************
### Date: 08/10/2026 18:57:21
### LastEditTime: 08/10/2026 19:14:52
### FilePath: //sflow//config.py
### Description: Frozen configuration model (tolerances, schedules, contour,
###              finite differences) and its YAML/JSON loader.
###
**********************************************************"""
from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator

# -----------------------------
# Groups
# -----------------------------


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class Tolerances(_Frozen):
    herm_tol: float = Field(1e-12, gt=0)
    eig_tol: float = Field(1e-10, gt=0)
    gap_tol: float = Field(1e-8, gt=0)
    mult_gap: float = Field(1e-6, gt=0)
    cluster_radius: float = Field(1e-3, gt=0)
    cond_max: float = Field(1e12, gt=0)
    sigma_floor: float = Field(1e-9, gt=0)
    riesz_tol: float = Field(1e-8, gt=0)
    rank_tol: float = Field(1e-7, gt=0)
    sig_tol: float = Field(1e-7, gt=0)
    angle_tol: float = Field(1e-6, gt=0)
    moment_tol: float = Field(1e-4, gt=0)
    ssf_tol: float = Field(0.1, gt=0)
    deriv_floor: float = Field(1e-4, gt=0)
    ortho_tol: float = Field(1e-5, gt=0)
    basis_tol: float = Field(1e-3, gt=0)
    identity_tol: float = Field(1e-6, gt=0)
    relaxed_tol: float = Field(1e-5, gt=0)


def _geometric(start: float, factor: float, count: int) -> Tuple[float, ...]:
    return tuple(start * factor**k for k in range(count))


class Schedules(_Frozen):
    """Decreasing schedules, relative to the triple scale."""

    y_schedule: Tuple[float, ...] = _geometric(1e-2, 0.1, 7)
    z_schedule: Tuple[float, ...] = _geometric(1e-3, 0.5, 13)

    @field_validator("y_schedule", "z_schedule")
    @classmethod
    def _strictly_decreasing(cls, value: Tuple[float, ...]) -> Tuple[float, ...]:
        if len(value) < 2:
            raise ValueError("a schedule needs at least two entries")
        if any(v <= 0 for v in value):
            raise ValueError("schedule entries must be positive")
        if any(b >= a for a, b in zip(value, value[1:])):
            raise ValueError("schedule must be strictly decreasing")
        return tuple(float(v) for v in value)


class ContourSettings(_Frozen):
    radius_factor: float = Field(0.4, gt=0, lt=0.5)
    radius_cap: float = Field(0.5, gt=0)
    nodes: int = Field(64, ge=8)
    max_nodes: int = Field(1024, ge=8)


class FiniteDifferenceSettings(_Frozen):
    deriv_eps: float = Field(1e-12, gt=0)
    richardson_levels: int = Field(3, ge=1, le=5)
    max_order: int = Field(5, ge=1, le=8)


class MonodromySettings(_Frozen):
    rho: float = Field(1e-4, gt=0)
    theta_steps: int = Field(64, ge=8)
    theta_min_power: int = Field(16, ge=8)
    fit_rho_max: float = Field(1e-6, gt=0)
    fit_rho_min: float = Field(1e-8, gt=0)
    fit_points: int = Field(5, ge=3)
    convergence_ratio: float = Field(0.7, gt=0, lt=1)


class QuadratureSettings(_Frozen):
    gauss_order: int = Field(16, ge=4)
    base_panels: int = Field(8, ge=1)
    max_depth: int = Field(40, ge=4)
    abs_tol: float = Field(1e-10, gt=0)


class SpectralConfig(_Frozen):
    """Everything a numerical operation may be tuned by."""

    tolerances: Tolerances = Tolerances()
    schedules: Schedules = Schedules()
    contour: ContourSettings = ContourSettings()
    fd: FiniteDifferenceSettings = FiniteDifferenceSettings()
    monodromy: MonodromySettings = MonodromySettings()
    quadrature: QuadratureSettings = QuadratureSettings()
    seed: int = Field(0, ge=0, lt=2**64)

    def with_overrides(self, overrides: Dict[str, Any]) -> "SpectralConfig":
        """Return a validated copy with `overrides` merged group by group."""
        data = self.model_dump()
        for key, value in overrides.items():
            if isinstance(value, dict) and isinstance(data.get(key), dict):
                data[key] = {**data[key], **value}
            else:
                data[key] = value
        return SpectralConfig.model_validate(data)


DEFAULT_CONFIG = SpectralConfig()


def resolve(config: Optional[SpectralConfig]) -> SpectralConfig:
    return DEFAULT_CONFIG if config is None else config


def load_config(path: Union[str, Path, None]) -> SpectralConfig:
    """Read a YAML or JSON config file; an empty or missing path gives the defaults."""
    if path is None:
        return DEFAULT_CONFIG
    with open(path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}
    return SpectralConfig.model_validate(data)
