# -*- coding: utf-8 -*-
import numpy as np
import pytest

from sflow.errors import NotAResonanceVector
from sflow.riesz.calculus import riesz_pair
from sflow.riesz.vectors import depth_criterion_probe, depth_one_criterion, vector_order_depth


def test_uturn_eigenvector_has_depth_one(uturn):
    pair = riesz_pair(uturn, 0.0)
    chi = np.array([1.0, 1.0]) / np.sqrt(2)
    assert vector_order_depth(chi, pair, uturn) == (1, 1)
    criterion = depth_one_criterion(chi, uturn, 0.0, pair)
    assert criterion.holds
    assert criterion.action_residual < 1e-6


def test_uturn_generalized_vector_has_order_two(uturn):
    pair = riesz_pair(uturn, 0.0)
    order, depth = vector_order_depth(np.array([1.0, -1.0]) / np.sqrt(2), pair, uturn)
    assert (order, depth) == (2, 0)


def test_simple_crossing_eigenvector_is_not_deep(simple_crossing):
    pair = riesz_pair(simple_crossing, 0.5)
    assert vector_order_depth(np.array([1.0, 0.0]), pair, simple_crossing) == (1, 0)
    assert not depth_one_criterion(np.array([1.0, 0.0]), simple_crossing, 0.5, pair).holds


def test_vector_outside_the_range_is_rejected(simple_crossing):
    pair = riesz_pair(simple_crossing, 0.5)
    with pytest.raises(NotAResonanceVector):
        vector_order_depth(np.array([0.0, 1.0]), pair, simple_crossing)


def test_depth_probe_finds_no_counterexample(uturn, rng):
    report = depth_criterion_probe(uturn, 0.0, 10, rng)
    assert report.trials == 10
    assert report.counterexamples == []
    assert report.criterion_holds == report.resonant
