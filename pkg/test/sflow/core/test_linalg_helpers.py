# -*- coding: utf-8 -*-
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sflow.core.linalg import (
    cluster_points,
    inclusion_residual,
    max_principal_angle,
    null_basis,
    numerical_rank,
    orthogonal_complement,
    random_hermitian,
    range_basis,
    signature_counts,
)
from sflow.errors import RankAmbiguous


def test_numerical_rank_reports_gap():
    m = np.diag([3.0, 1.0, 1e-12])
    decision = numerical_rank(m, 1e-7)
    assert decision.rank == 2
    assert decision.above == pytest.approx(1.0)
    assert decision.below == pytest.approx(1e-12)
    assert not decision.ambiguous


def test_numerical_rank_strict_raises_near_threshold():
    m = np.diag([1.0, 2e-7])
    with pytest.raises(RankAmbiguous):
        numerical_rank(m, 1e-7, strict=True)


def test_range_and_null_bases_are_complementary():
    m = np.array([[1.0, 1.0, 0.0], [1.0, 1.0, 0.0], [0.0, 0.0, 2.0]])
    rng_basis = range_basis(m, 1e-10)
    ker = null_basis(m, 1e-10)
    assert rng_basis.shape[1] == 2
    assert ker.shape[1] == 1
    assert np.linalg.norm(m @ ker) < 1e-12
    assert np.linalg.norm(rng_basis.conj().T @ ker) < 1e-12


def test_inclusion_residual_and_angles():
    e1 = np.array([[1.0], [0.0]])
    assert inclusion_residual(e1, np.array([2.0, 0.0])) == pytest.approx(0.0)
    assert inclusion_residual(e1, np.array([0.0, 1.0])) == pytest.approx(1.0)
    assert inclusion_residual(np.zeros((2, 0)), np.array([1.0, 1.0])) == 1.0
    assert max_principal_angle(e1, np.array([[0.0], [1.0]])) == pytest.approx(np.pi / 2)
    assert max_principal_angle(e1, np.zeros((2, 0))) == pytest.approx(np.pi / 2)


def test_orthogonal_complement_dimension():
    basis = np.eye(4)[:, :1]
    comp = orthogonal_complement(basis)
    assert comp.shape == (4, 3)
    assert np.linalg.norm(basis.T @ comp) < 1e-12


def test_signature_counts():
    assert signature_counts([2.0, -1.0, 1e-12, 0.5], 1e-9) == (2, 1, 1)


def test_cluster_points_joins_within_radius():
    clusters = cluster_points([0.0, 1e-4, 1.0, 1.0 + 1e-4j, -2.0], lambda p: 1e-3)
    assert clusters == [[4], [0, 1], [2, 3]]


@settings(max_examples=25, deadline=None)
@given(dim=st.integers(1, 6), seed=st.integers(0, 2**32 - 1))
def test_random_hermitian_is_hermitian(dim, seed):
    m = random_hermitian(dim, np.random.default_rng(seed))
    assert m.shape == (dim, dim)
    assert np.allclose(m, m.conj().T)
    assert np.all(np.abs(m) <= np.sqrt(2) + 1e-12)
