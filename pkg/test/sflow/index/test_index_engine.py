# -*- coding: utf-8 -*-
import numpy as np
import pytest

from sflow.index.engine import index_signature_check, point_indices, resonance_index, resonance_matrix
from sflow.instances import random_resonant_triple
from sflow.resonance.locator import real_resonance_points_on_segment


@pytest.mark.parametrize(
    "name, r, expected",
    [("simple_crossing", 0.5, (1, 0, 1)), ("uturn", 0.0, (1, 1, 0)), ("order3", 0.0, (2, 1, 1)), ("pair_m2", 0.0, (1, 1, 0))],
)
def test_half_plane_split(request, name, r, expected):
    t = request.getfixturevalue(name)
    report = resonance_index(t, r)
    assert (report.N_plus, report.N_minus, report.index) == expected
    assert report.stable
    assert report.u_turn_ok
    assert report.N == report.N_plus + report.N_minus


@pytest.mark.parametrize("name, r", [("simple_crossing", 0.5), ("uturn", 0.0), ("order3", 0.0), ("pair_m2", 0.0)])
def test_index_equals_signature(request, name, r):
    t = request.getfixturevalue(name)
    check = index_signature_check(t, r)
    assert check.agree


def test_resonance_matrix_of_order3(order3):
    matrix = resonance_matrix(order3, 0.0)
    assert (matrix.positive, matrix.negative) == (2, 1)
    assert matrix.rank == 3
    assert matrix.herm_residual < 1e-8


def test_flipping_the_direction_flips_the_index(simple_crossing):
    flipped = simple_crossing.negated()
    (p,) = real_resonance_points_on_segment(flipped.lam, flipped.H, flipped.V, (-1.0, 0.0))
    assert resonance_index(flipped, p).index == -1


def test_random_indices_match_signatures(rng):
    for dim in (2, 3, 5):
        inst = random_resonant_triple(dim, rng)
        t = inst.triple
        points = real_resonance_points_on_segment(t.lam, t.H, t.V, inst.interval)
        indices = point_indices(t, points)
        assert indices == [resonance_matrix(t, p).signature for p in points]
        assert all(abs(i) <= p.geometric_mult for i, p in zip(indices, points))


def test_custom_schedule_is_used(simple_crossing):
    report = resonance_index(simple_crossing, 0.5, y_schedule=(1e-3, 1e-4, 1e-5))
    assert report.y_used == pytest.approx(1e-4 * simple_crossing.scale)
    assert np.isfinite(report.y_used)
