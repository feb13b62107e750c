# -*- coding: utf-8 -*-
"""Shared instances for the test suite."""
import numpy as np
import pytest

from sflow.config import DEFAULT_CONFIG
from sflow.instances import (
    decoupled_pair,
    diagonal_path,
    normalization_path,
    order3_triple,
    uturn_path,
    uturn_triple,
)
from sflow.types import Direction, HermitianOperator, Triple


@pytest.fixture
def config():
    return DEFAULT_CONFIG


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def uturn():
    return uturn_triple()


@pytest.fixture
def order3():
    return order3_triple()


@pytest.fixture
def pair_m2():
    return decoupled_pair()


@pytest.fixture
def simple_crossing():
    """diag(r - 0.5, 2) at lambda = 0: one order-one crossing at r = 0.5."""
    return Triple(0.0, HermitianOperator.diag([-0.5, 2.0]), Direction(np.diag([1.0, 0.0])))


@pytest.fixture
def normalization():
    return normalization_path()


@pytest.fixture
def diag_path():
    return diagonal_path()


@pytest.fixture
def uturn_flow_path():
    return uturn_path()
