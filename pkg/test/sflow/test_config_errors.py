# -*- coding: utf-8 -*-
import pytest
from pydantic import ValidationError

from sflow.config import DEFAULT_CONFIG, SpectralConfig, load_config, resolve
from sflow.errors import (
    CrossCheckFailure,
    EngineDisagreement,
    GroupLeak,
    InputError,
    NotHermitian,
    NumericalFailure,
    SchemaError,
    SpectralFlowError,
)


def test_defaults():
    cfg = SpectralConfig()
    assert cfg.tolerances.riesz_tol == 1e-8
    assert len(cfg.schedules.y_schedule) == 7
    assert cfg.schedules.y_schedule[-1] == pytest.approx(1e-8)
    assert len(cfg.schedules.z_schedule) == 13
    assert cfg.contour.radius_factor == 0.4
    assert resolve(None) is DEFAULT_CONFIG
    assert resolve(cfg) is cfg


def test_with_overrides_merges_groups():
    cfg = DEFAULT_CONFIG.with_overrides({"tolerances": {"gap_tol": 1e-6}, "seed": 5})
    assert cfg.tolerances.gap_tol == 1e-6
    assert cfg.tolerances.riesz_tol == DEFAULT_CONFIG.tolerances.riesz_tol
    assert cfg.seed == 5
    assert DEFAULT_CONFIG.seed == 0


def test_config_is_frozen():
    with pytest.raises(ValidationError):
        DEFAULT_CONFIG.seed = 3


@pytest.mark.parametrize(
    "overrides",
    [
        {"schedules": {"y_schedule": (1e-2,)}},
        {"schedules": {"y_schedule": (1e-3, 1e-2)}},
        {"schedules": {"z_schedule": (1e-3, 0.0)}},
        {"contour": {"radius_factor": 0.6}},
        {"tolerances": {"unknown": 1.0}},
        {"seed": -1},
    ],
)
def test_invalid_overrides(overrides):
    with pytest.raises(ValidationError):
        DEFAULT_CONFIG.with_overrides(overrides)


def test_load_config(tmp_path):
    assert load_config(None) is DEFAULT_CONFIG
    f = tmp_path / "cfg.yaml"
    f.write_text("quadrature:\n  gauss_order: 24\nschedules:\n  y_schedule: [0.1, 0.01, 0.001]\n", encoding="utf-8")
    cfg = load_config(f)
    assert cfg.quadrature.gauss_order == 24
    assert cfg.schedules.y_schedule == (0.1, 0.01, 0.001)
    empty = tmp_path / "empty.yaml"
    empty.write_text("", encoding="utf-8")
    assert load_config(empty) == DEFAULT_CONFIG


@pytest.mark.parametrize(
    "cls, code",
    [
        (NotHermitian, 2),
        (SchemaError, 2),
        (GroupLeak, 3),
        (EngineDisagreement, 4),
    ],
)
def test_exit_codes(cls, code):
    err = cls("boom", {"k": 1})
    assert err.exit_code == code
    assert err.details == {"k": 1}
    assert str(err) == "boom"
    assert isinstance(err, SpectralFlowError)


def test_hierarchy():
    assert issubclass(NotHermitian, InputError)
    assert issubclass(GroupLeak, NumericalFailure)
    assert issubclass(EngineDisagreement, CrossCheckFailure)
    assert str(GroupLeak()) == "GroupLeak"
