# -*- coding: utf-8 -*-
import numpy as np
import pytest

from sflow.flow.axioms import AXIOMS, TRIALS, rs_axiom_suite
from sflow.flow.engines import total_resonance_index
from sflow.types import HermitianOperator, OperatorPath


def test_suite_passes_on_a_few_trials(config):
    report = rs_axiom_suite(config, seed=7, trials=2)
    assert [r.name for r in report.results] == list(AXIOMS)
    assert report.passed
    assert all(report[name].trials == 2 for name in AXIOMS)
    assert set(report.to_dict()) == set(AXIOMS)


def test_suite_is_seeded(config):
    a = rs_axiom_suite(config, seed=3, trials=1).to_dict()
    b = rs_axiom_suite(config, seed=3, trials=1).to_dict()
    assert a == b


@pytest.mark.parametrize("name", AXIOMS)
def test_single_trials_hold(name, config):
    holds, payload = TRIALS[name](np.random.default_rng(11), config)
    assert holds, payload


def test_direct_sum_with_reverse_cancels(normalization):
    total = normalization.direct_sum(normalization.reversed())
    assert total_resonance_index(total, 0.0).total == 0


def test_splitting_adds_up(diag_path):
    head, tail = diag_path.split(0, 0.5)
    assert total_resonance_index(head, 0.0).total == 1
    assert total_resonance_index(tail, 0.0).total == 1


def test_constant_path_has_no_flow():
    path = OperatorPath.constant(HermitianOperator.diag([-1.0, 2.0]), 3)
    assert total_resonance_index(path, 0.0).total == 0
