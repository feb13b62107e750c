# -*- coding: utf-8 -*-
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sflow.core.linalg import random_hermitian
from sflow.core.resolvent import (
    a_operator,
    a_operator_batch,
    b_operator,
    counting_above,
    counting_below,
    eigh,
    resolvent,
    second_resolvent_residual,
    spectral_projection_above,
)
from sflow.errors import ResolventSingular, ThresholdTooClose
from sflow.types import Direction, HermitianOperator, Triple


def _random_triple(dim, seed):
    rng = np.random.default_rng(seed)
    return Triple(
        float(rng.uniform(-1, 1)),
        HermitianOperator(random_hermitian(dim, rng)),
        Direction(random_hermitian(dim, rng)),
    )


def test_eigh_is_ascending_with_fixed_phase():
    spec = eigh(np.array([[2.0, 1.0j], [-1.0j, 2.0]]))
    assert np.all(np.diff(spec.eigenvalues) >= 0)
    lead = spec.eigenvectors[np.argmax(np.abs(spec.eigenvectors), axis=0), [0, 1]]
    assert np.allclose(lead.imag, 0.0) and np.all(lead.real > 0)


def test_a_and_b_operators_match_definitions(uturn):
    s, z = 0.3 + 0.2j, uturn.lam + 0.1j
    r = resolvent(uturn, z, s)
    assert np.allclose(a_operator(uturn, z, s), r @ uturn.V.entries)
    assert np.allclose(b_operator(uturn, z, s), uturn.V.entries @ r)
    batch = a_operator_batch(uturn, z, [s, 2 * s])
    assert batch.shape == (2, uturn.dim, uturn.dim)
    assert np.allclose(batch[1], a_operator(uturn, z, 2 * s))


def test_resolvent_singular_at_resonance(uturn):
    with pytest.raises(ResolventSingular) as info:
        a_operator(uturn, uturn.lam, 0.0)
    assert "cond" in info.value.details


@settings(max_examples=20, deadline=None)
@given(dim=st.integers(2, 5), seed=st.integers(0, 2**32 - 1))
def test_second_resolvent_identity(dim, seed):
    t = _random_triple(dim, seed)
    z = t.lam + 0.5j
    assert second_resolvent_residual(t, z, 0.2 + 0.1j, -0.3 + 0.4j) < 1e-8


def test_counting_and_projection():
    H = HermitianOperator.diag([-1.0, 0.5, 2.0])
    assert counting_above(H, 0.0) == 2
    assert counting_below(H, 0.0) == 1
    P = spectral_projection_above(H, 0.0)
    assert np.allclose(P, np.diag([0.0, 1.0, 1.0]))


def test_counting_refuses_threshold_on_spectrum():
    with pytest.raises(ThresholdTooClose):
        counting_above(HermitianOperator.diag([0.0, 1.0]), 0.0)
