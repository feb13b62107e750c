# -*- coding: utf-8 -*-
import numpy as np
import pytest

from sflow.config import DEFAULT_CONFIG
from sflow.flow.ssf import graded_breaks, poisson_integrand, ssf_poisson
from sflow.types import Direction, HermitianOperator, Triple


def test_integrand_of_a_scalar_line():
    t = Triple(0.0, HermitianOperator(np.array([[-1.0]])), Direction(np.array([[2.0]])))
    r = np.array([0.0, 0.5, 1.0])
    y = 0.1
    expected = (1 / np.pi) * y * 2.0 / ((-1.0 + 2.0 * r) ** 2 + y**2)
    assert np.allclose(poisson_integrand(t, r, y), expected)


def test_breaks_are_graded_around_crossings():
    breaks = graded_breaks([0.5], 1e-4, 8)
    assert breaks[0] == 0.0 and breaks[-1] == 1.0
    assert np.all(np.diff(breaks) > 0)
    near = breaks[np.abs(breaks - 0.5) <= 1e-3]
    assert near.size >= 19
    assert np.min(np.diff(breaks)) == pytest.approx(1e-4, rel=1e-6)


@pytest.mark.parametrize(
    "name, lam, expected",
    [("normalization", 0.0, 1.0), ("diag_path", 0.0, 2.0), ("uturn_flow_path", 1.0, 0.0)],
)
def test_ssf_matches_the_flow(request, name, lam, expected):
    result = ssf_poisson(request.getfixturevalue(name), lam)
    assert result.value == pytest.approx(expected, abs=0.02)
    assert len(result.by_y) == 2
    assert result.by_y[0][0] == pytest.approx(2 * result.by_y[1][0])
    assert result.evaluations > 0


def test_ssf_with_a_coarse_schedule(normalization):
    result = ssf_poisson(normalization, 0.0, y_schedule=(1e-2, 1e-3))
    assert abs(result.value - 1.0) <= DEFAULT_CONFIG.tolerances.ssf_tol
