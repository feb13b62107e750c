# -*- coding: utf-8 -*-
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sflow.eigenpath.derivatives import (
    fd_weights,
    grid_indices,
    half_width,
    richardson,
    stencil_derivative,
    symmetric_limit,
)


def test_central_weights():
    assert np.allclose(fd_weights(1, 1), (-0.5, 0.0, 0.5))
    assert np.allclose(fd_weights(2, 2), (-1 / 12, 4 / 3, -5 / 2, 4 / 3, -1 / 12))


def test_grid_holds_every_level():
    idx = grid_indices(2, 3)
    assert idx == [-8, -4, -2, -1, 0, 1, 2, 4, 8]


def test_richardson_removes_leading_error():
    h = np.array([0.1, 0.05, 0.025])
    values = [np.array(1.0 + 3.0 * x**2 + 5.0 * x**4) for x in h]
    est = richardson(values, 2)
    assert float(est.value) == pytest.approx(1.0, abs=1e-12)


@settings(max_examples=20, deadline=None)
@given(k=st.integers(1, 4), x0=st.floats(-1.0, 1.0))
def test_stencil_derivatives_of_exponential(k, x0):
    levels, h = 3, 0.1
    p = half_width(k)
    fine = h / 2 ** (levels - 1)
    samples = {i: np.array(math.exp(x0 + i * fine)) for i in grid_indices(p, levels)}
    est = stencil_derivative(samples, k, h, levels)
    assert float(est.value) == pytest.approx(math.exp(x0), rel=1e-5)


def test_symmetric_limit_of_even_function():
    levels = 3
    samples = {i: np.array(math.cosh(0.01 * i)) for i in grid_indices(1, levels)}
    samples[0] = np.array(np.nan)
    assert float(symmetric_limit(samples, levels).value) == pytest.approx(1.0, abs=1e-10)
