# -*- coding: utf-8 -*-
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sflow.errors import ResonantVertex
from sflow.flow.engines import (
    endpoint_flow,
    essential_codimension,
    fredholm_flow,
    integer_engines,
    projection_pair_index,
    segment_points,
    total_intersection_number,
    total_resonance_index,
)
from sflow.instances import random_path, random_unitary
from sflow.types import OperatorPath


@pytest.mark.parametrize(
    "name, lam, expected",
    [("normalization", 0.0, 1), ("diag_path", 0.0, 2), ("uturn_flow_path", 1.0, 0)],
)
def test_every_engine_on_closed_form_paths(request, name, lam, expected):
    path = request.getfixturevalue(name)
    assert tuple(integer_engines(path, lam)) == (expected, expected, expected)
    assert fredholm_flow(path, lam) == expected


def test_breakdown_lists_each_crossing(diag_path):
    breakdown = total_resonance_index(diag_path, 0.0)
    assert int(breakdown) == 2
    assert [round(c.r, 8) for c in breakdown.contributions] == [0.25, 0.75]
    assert all((c.N, c.m, c.value) == (1, 1, 1) for c in breakdown.contributions)


def test_uturn_path_contributes_zero(uturn_flow_path):
    breakdown = total_intersection_number(uturn_flow_path, 1.0)
    (c,) = breakdown.contributions
    assert (c.N, c.m, c.value) == (2, 1, 0)
    assert c.r == pytest.approx(0.5, abs=1e-8)


def test_reversed_path_negates_the_flow(diag_path):
    assert endpoint_flow(diag_path.reversed(), 0.0) == -2
    assert total_resonance_index(diag_path.reversed(), 0.0).total == -2


def test_resonant_vertex_is_reported():
    path = OperatorPath.from_arrays([np.array([[-1.0]]), np.array([[0.0]]), np.array([[1.0]])])
    with pytest.raises(ResonantVertex) as info:
        segment_points(path, 0.0)
    assert info.value.details["vertex"] == 1


def _projection(dim, rank, rng):
    u = random_unitary(dim, rng)[:, :rank]
    return u @ u.conj().T


@settings(max_examples=30, deadline=None)
@given(dim=st.integers(1, 6), data=st.data())
def test_pair_index_is_the_rank_difference(dim, data):
    rng = np.random.default_rng(data.draw(st.integers(0, 2**32 - 1)))
    p_rank = data.draw(st.integers(0, dim))
    q_rank = data.draw(st.integers(0, dim))
    P, Q = _projection(dim, p_rank, rng), _projection(dim, q_rank, rng)
    pair = projection_pair_index(P, Q)
    assert pair.index == essential_codimension(P, Q) == q_rank - p_rank


def test_pair_index_sees_orthogonal_ranges():
    P = np.diag([1.0, 0.0])
    Q = np.diag([0.0, 1.0])
    pair = projection_pair_index(P, Q)
    assert (pair.kernel, pair.cokernel) == (1, 1)
    assert pair.index == 0


def test_random_paths_agree(rng):
    for dim, segments in ((2, 1), (3, 2), (4, 3)):
        path, lam = random_path(dim, segments, rng)
        tri, inter, endpoint = integer_engines(path, lam)
        assert tri == inter == endpoint
        assert fredholm_flow(path, lam) == endpoint
