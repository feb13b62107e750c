# -*- coding: utf-8 -*-
import pytest

from sflow.errors import GroupLeak
from sflow.flow.stability import group_split, stability_check


@pytest.mark.parametrize("name, r, index", [("simple_crossing", 0.5, 1), ("uturn", 0.0, 0), ("order3", 0.0, 1)])
def test_index_survives_small_perturbations(request, rng, name, r, index):
    t = request.getfixturevalue(name)
    report = stability_check(t, r, 1e-3, 3, rng)
    assert report.index == index
    assert len(report.groups) == 6
    assert {g.target for g in report.groups} == {"V", "H"}
    assert report.holds


def test_uturn_perturbation_keeps_two_points(uturn, rng):
    report = stability_check(uturn, 0.0, 1e-3, 2, rng)
    for group in report.groups:
        assert len(group.real_points) + group.complex_points == 2


def test_group_split_detects_a_leak(simple_crossing):
    with pytest.raises(GroupLeak):
        group_split(simple_crossing, 0.5, 0.1, 2, "V")
