# -*- coding: utf-8 -*-
import numpy as np
import pytest

from sflow.config import DEFAULT_CONFIG
from sflow.errors import ContourCrossesPole
from sflow.riesz.calculus import (
    contour_radius,
    jordan_profile,
    pair_orthogonality,
    reduces_orders_check,
    resonance_space_dims,
    riesz_pair,
)


def _assert_quality(pair):
    p_norm = max(1.0, float(np.linalg.norm(pair.P, 2)))
    assert pair.residuals.within(DEFAULT_CONFIG.tolerances.riesz_tol, p_norm)
    assert pair.residuals.trace_defect < 1e-6


def test_simple_crossing_projection(simple_crossing):
    pair = riesz_pair(simple_crossing, 0.5)
    _assert_quality(pair)
    assert pair.rank == 1
    assert pair.order == 1
    assert np.allclose(pair.P, np.diag([1.0, 0.0]), atol=1e-8)
    assert np.allclose(pair.Q, pair.P.conj().T)


@pytest.mark.parametrize(
    "name, rank, sizes",
    [("uturn", 2, (2,)), ("order3", 3, (3,)), ("pair_m2", 2, (1, 1))],
)
def test_jordan_profiles(request, name, rank, sizes):
    t = request.getfixturevalue(name)
    pair = riesz_pair(t, 0.0)
    _assert_quality(pair)
    profile = jordan_profile(pair)
    assert pair.rank == rank
    assert profile.N == rank
    assert profile.sizes == sizes
    assert profile.m == len(sizes)
    assert profile.d == sizes[0]
    assert pair.order == sizes[0]


def test_full_rank_group_projects_onto_everything(uturn):
    pair = riesz_pair(uturn, 0.0)
    assert np.allclose(pair.P, np.eye(2), atol=1e-8)
    assert np.linalg.norm(pair.A_nilpotent) > 1e-3
    assert np.linalg.norm(pair.A_nilpotent @ pair.A_nilpotent) < 1e-8


def test_resonance_space_staircase(order3, uturn):
    assert resonance_space_dims(order3, riesz_pair(order3, 0.0)) == [1, 2, 3]
    assert resonance_space_dims(uturn, riesz_pair(uturn, 0.0)) == [1, 2]


def test_nilpotent_lowers_orders(order3):
    angles = reduces_orders_check(order3, riesz_pair(order3, 0.0))
    assert len(angles) == 2
    assert max(angles) < 1e-5


def test_distinct_points_have_orthogonal_projections(pair_m2):
    at_zero = riesz_pair(pair_m2, 0.0)
    at_minus_one = riesz_pair(pair_m2, -1.0)
    assert at_minus_one.rank == 1
    assert pair_orthogonality([at_zero, at_minus_one]) < 1e-8


def test_contour_radius_keeps_neighbours_outside(pair_m2):
    assert contour_radius(0.0, [-1.0]) == pytest.approx(0.4)
    assert contour_radius(0.0, []) == DEFAULT_CONFIG.contour.radius_cap
    with pytest.raises(ContourCrossesPole):
        riesz_pair(pair_m2, 0.0, radius=1.2)
