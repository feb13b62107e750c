# -*- coding: utf-8 -*-
import pytest

from sflow.index.reduction import (
    antisymmetry_check,
    local_constancy_check,
    plane_homotopy_check,
    reduced_index_check,
    resolvent_reduction_residual,
)


@pytest.mark.parametrize("name, r", [("simple_crossing", 0.5), ("uturn", 0.0), ("order3", 0.0)])
def test_reduced_direction_keeps_index_and_pair(request, name, r):
    t = request.getfixturevalue(name)
    report = reduced_index_check(t, r)
    assert report.agree
    assert report.P_residual < 1e-6
    assert report.A_residual < 1e-6


def test_resolvent_reduction(order3):
    assert resolvent_reduction_residual(order3, 0.0) < 1e-8


def test_plane_homotopy_keeps_point_isolated(uturn):
    assert plane_homotopy_check(uturn, 0.0) > 0.0


@pytest.mark.parametrize("name, r", [("simple_crossing", 0.5), ("order3", 0.0), ("pair_m2", 0.0)])
def test_antisymmetry(request, name, r):
    report = antisymmetry_check(request.getfixturevalue(name), r)
    assert report.holds


def test_local_constancy_for_order_one(simple_crossing, rng):
    report = local_constancy_check(simple_crossing, 0.5, 1e-2, 5, rng)
    assert report.applicable
    assert report.base_index == 1
    assert report.holds


def test_local_constancy_skips_higher_order(uturn, rng):
    report = local_constancy_check(uturn, 0.0, 1e-2, 5, rng)
    assert not report.applicable
    assert report.indices == []
