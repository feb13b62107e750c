# -*- coding: utf-8 -*-
import numpy as np
import pytest

from sflow.block.decomposition import block_split, eigenspace
from sflow.block.identities import identity_S_A, identity_table, order_k_span_check, property_AB
from sflow.block.laurent import laurent_D, lemma_chain_residuals, schur_consistency
from sflow.errors import IllConditionedEigenproblem
from sflow.instances import direct_sum_triple, ground_state_triple, order_d_triple

CASES = [("simple_crossing", 0.5), ("uturn", 0.0), ("order3", 0.0), ("pair_m2", 0.0)]


@pytest.mark.parametrize("name, r", CASES)
def test_blocks_reassemble(request, name, r):
    t = request.getfixturevalue(name)
    block = block_split(t, r)
    h, v = block.reassembled()
    assert np.allclose(h, t.operator_at(r).entries, atol=1e-10)
    assert np.allclose(v, t.V.entries, atol=1e-10)
    assert block.m + block.F.shape[1] == t.dim
    assert np.allclose(block.P_hat + block.P_eigen, np.eye(t.dim), atol=1e-10)


def test_eigenspace_needs_an_eigenvalue(uturn):
    with pytest.raises(IllConditionedEigenproblem):
        eigenspace(uturn, 0.3)


def test_uturn_eigenvector_is_v_orthogonal(uturn):
    block = block_split(uturn, 0.0)
    assert block.m == 1
    assert abs(block.alpha[0, 0]) < 1e-12
    assert block.regularity_margin() == pytest.approx(1.0)


@pytest.mark.parametrize("name, r, order", [("uturn", 0.0, 2), ("order3", 0.0, 3), ("pair_m2", 0.0, 1)])
def test_laurent_coefficients(request, name, r, order):
    t = request.getfixturevalue(name)
    data = laurent_D(t, r)
    assert data.order == order
    assert len(data.D) == order + 1
    assert max(data.hermitian_defects()) < 1e-10
    assert max(lemma_chain_residuals(data).values()) < 1e-6
    assert schur_consistency(t, data, [r + 0.05j, r - 0.03 + 0.02j]) < 1e-8


@pytest.mark.parametrize("name, r", CASES)
def test_block_identities_hold(request, name, r):
    t = request.getfixturevalue(name)
    assert identity_table(t, r).failures() == []
    assert max(identity_S_A(t, r).values()) < 1e-6 * t.scale


@pytest.mark.parametrize(
    "build",
    [
        lambda rng: ground_state_triple(3, rng),
        lambda rng: ground_state_triple(4, rng),
        lambda rng: order_d_triple(2, 4, rng),
        lambda rng: order_d_triple(3, 5, rng),
        lambda rng: direct_sum_triple([2, 1], rng),
    ],
    ids=["ground3", "ground4", "order2_dim4", "order3_dim5", "direct_sum_2_1"],
)
def test_block_identities_hold_beyond_two_dimensions(build):
    t = build(np.random.default_rng(3))
    assert t.dim >= 3
    table = identity_table(t, 0.0)
    assert table.relaxed["holomorphic_PS"] <= 1e-5 * t.scale
    assert table.failures() == []


@pytest.mark.parametrize("name, r", [("simple_crossing", 0.5), ("uturn", 0.0)])
def test_property_b_implies_a_here(request, name, r):
    report = property_AB(request.getfixturevalue(name), r)
    assert report.B
    assert report.A
    assert not report.counterexample


def test_order_two_vectors_lie_in_the_chain_span(order3):
    assert order_k_span_check(order3, 0.0, 2) < 1e-5
