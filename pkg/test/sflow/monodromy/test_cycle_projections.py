# -*- coding: utf-8 -*-
import numpy as np
import pytest

from sflow.monodromy.cycles import analyze_cycles
from sflow.monodromy.projections import (
    blowup_rate,
    cycle_projection,
    equal_share_check,
    moment_limit_check,
    projection_partition,
)
from sflow.riesz.calculus import riesz_pair


def test_decoupled_cycles_partition_the_projection(pair_m2):
    pair = riesz_pair(pair_m2, 0.0)
    analysis = analyze_cycles(pair_m2, 0.0)
    projections = [cycle_projection(pair_m2, analysis.trace, c, pair) for c in analysis.cycles]
    report = projection_partition(projections, pair)
    assert report.within(1e-6)
    for proj in projections:
        assert proj.idem < 1e-6
        assert np.trace(proj.P_nu).real == pytest.approx(1.0, abs=1e-6)


def test_uturn_cycle_projection(uturn):
    pair = riesz_pair(uturn, 0.0)
    analysis = analyze_cycles(uturn, 0.0)
    (cycle,) = analysis.cycles
    proj = cycle_projection(uturn, analysis.trace, cycle, pair)
    assert np.allclose(proj.P_nu, pair.P, atol=1e-6)
    assert proj.commute < 1e-6
    assert moment_limit_check(proj, pair, 1) < 1e-4
    share = equal_share_check(proj, pair)
    assert share.asserted
    assert share.holds(0.05)
    rate = blowup_rate(proj)
    assert rate.expected == pytest.approx(-0.5)
    assert rate.deviation < 0.05
