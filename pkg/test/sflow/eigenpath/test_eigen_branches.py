# -*- coding: utf-8 -*-
import numpy as np
import pytest

from sflow.config import DEFAULT_CONFIG
from sflow.eigenpath.branches import branch_step, branches_to_csv, eigen_branches
from sflow.eigenpath.structure import (
    jordan_basis,
    orthogonality_suite,
    reconstruct_P,
    tfae_order_check,
)
from sflow.instances import order_d_triple
from sflow.riesz.calculus import riesz_pair


def test_simple_crossing_branch(simple_crossing):
    (branch,) = eigen_branches(simple_crossing, 0.5)
    assert branch.order == 1
    assert branch.sign == 1
    assert branch.lam_derivs[1] == pytest.approx(1.0, abs=1e-6)
    assert abs(abs(branch.phi[0]) - 1.0) < 1e-8


def test_uturn_branch_turns_back(uturn):
    (branch,) = eigen_branches(uturn, 0.0)
    assert branch.order == 2
    assert branch.u_turn
    assert branch.sign == 1
    assert branch.lam_derivs[2] == pytest.approx(1.0, abs=1e-4)
    assert branch.cross_check < 1e-3


def test_order3_branch(order3):
    (branch,) = eigen_branches(order3, 0.0)
    assert branch.order == 3
    assert branch.sign == 1
    assert not branch.u_turn


def test_decoupled_branches_have_opposite_signs(pair_m2):
    branches = eigen_branches(pair_m2, 0.0)
    assert [b.order for b in branches] == [1, 1]
    assert [b.sign for b in branches] == [-1, 1]
    assert orthogonality_suite(branches, pair_m2.V.entries).worst < 1e-5


@pytest.mark.parametrize("name", ["uturn", "order3", "pair_m2"])
def test_derivatives_rebuild_the_projection(request, name):
    t = request.getfixturevalue(name)
    pair = riesz_pair(t, 0.0)
    branches = eigen_branches(t, 0.0)
    rec = reconstruct_P(branches, t.V.entries, pair)
    assert rec.distance < 1e-3
    assert rec.off_block < 1e-4
    basis = jordan_basis(branches, pair)
    assert basis.rank == pair.rank
    assert basis.span_residual < 1e-3


def test_order_conditions_hold(order3):
    pair = riesz_pair(order3, 0.0)
    (branch,) = eigen_branches(order3, 0.0)
    cond = tfae_order_check(branch, order3.V.entries, pair)
    assert cond.order == 3
    assert cond.pairing < 1e-3
    assert abs(cond.leading) > 1e-3


def test_step_shrinks_near_other_points():
    assert branch_step(1, [], 0.0) > branch_step(1, [0.1], 0.0)
    assert branch_step(3, [], 0.0) == pytest.approx(1e-12 ** (1 / 5))


def test_branch_csv(simple_crossing):
    text = branches_to_csv(eigen_branches(simple_crossing, 0.5))
    lines = text.strip().splitlines()
    assert lines[0] == "s,branch,lambda"
    assert len(lines) > 3


@pytest.mark.parametrize("d", [2, 3])
def test_generated_branches_match_their_leading_derivative(d):
    t = order_d_triple(d, d + 1, np.random.default_rng(5))
    (branch,) = eigen_branches(t, 0.0)
    assert branch.order == d
    assert branch.cross_check <= DEFAULT_CONFIG.tolerances.basis_tol * t.scale
