# -*- coding: utf-8 -*-
import warnings

import numpy as np
import pytest
import scipy.linalg
from pydantic import ValidationError

from sflow.eigenpath.branches import eigen_branches
from sflow.errors import GenerationFailed
from sflow.instances import (
    ORDER3_EXPECTED,
    UTURN_EXPECTED,
    VERTEX_MARGIN,
    InstanceSpec,
    det_residual,
    describe,
    direct_sum_triple,
    generate,
    ground_bends_down,
    ground_state_triple,
    order3_triple,
    order_d_triple,
    random_path,
    random_unitary,
    trial_seed,
    validate_order,
    validated_ground_triple,
)

SAMPLES = [0.1, -0.3, 0.2 + 0.5j, 1.5j, -0.7 - 0.2j]


def test_closed_form_determinants(uturn, order3):
    assert det_residual(uturn, lambda s: -(s**2), SAMPLES) < 1e-12
    assert det_residual(order3, lambda s: -(s**3), SAMPLES) < 1e-12


def test_random_unitary(rng):
    u = random_unitary(4, rng)
    assert np.allclose(u.conj().T @ u, np.eye(4))


def test_random_path_keeps_vertices_off_lambda(rng):
    path, lam = random_path(3, 4, rng)
    assert path.n_segments == 4
    for v in path.vertices:
        assert np.min(np.abs(scipy.linalg.eigvalsh(v.entries) - lam)) > VERTEX_MARGIN


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_prescribed_order(d, rng):
    t = order_d_triple(d, max(d, 2) + 1, rng)
    assert t.lam == 0.0
    assert validate_order(t, [d])


def test_canonical_order3_is_the_documented_triple():
    t = order_d_triple(3)
    assert np.allclose(t.V.entries, order3_triple().V.entries)


def test_order_needs_room():
    with pytest.raises(GenerationFailed):
        order_d_triple(4, 3)


def test_direct_sum_keeps_block_sizes(rng):
    t = direct_sum_triple([2, 1], rng)
    assert t.dim == 4
    assert validate_order(t, [2, 1])


def test_ground_state_branch_bends_down(rng):
    t = ground_state_triple(4, rng)
    assert t.lam == pytest.approx(float(scipy.linalg.eigvalsh(t.H.entries)[0]))
    (branch,) = eigen_branches(t, 0.0)
    assert branch.order == 2
    assert branch.lam_derivs[2] < 0


def test_spec_validation():
    with pytest.raises(ValidationError):
        InstanceSpec(kind="order_d")
    with pytest.raises(ValidationError):
        InstanceSpec(kind="order_d", d=4, dim=3)
    with pytest.raises(ValidationError):
        InstanceSpec(kind="direct_sum", orders=())
    with pytest.raises(ValidationError):
        InstanceSpec(kind="nonsense")


def test_generate_is_reproducible():
    spec = InstanceSpec(kind="random", dim=3)
    a, b = generate(spec, 5), generate(spec, 5)
    assert np.array_equal(a.triple.H.entries, b.triple.H.entries)
    assert a.lam == b.lam
    c = generate(spec, 6)
    assert not np.array_equal(a.triple.H.entries, c.triple.H.entries)


def test_generate_closed_forms():
    uturn = generate(InstanceSpec(kind="uturn"), 0)
    assert dict(uturn.expected) == UTURN_EXPECTED
    order3 = generate(InstanceSpec(kind="order_d", d=3, canonical=True), 0)
    assert dict(order3.expected) == ORDER3_EXPECTED
    path = generate(InstanceSpec(kind="uturn", segments=1), 0)
    assert path.path is not None and path.triple is None
    assert describe(path)["expected"] == {"flow": 0}


def test_generate_random_path():
    inst = generate(InstanceSpec(kind="random", dim=2, segments=3), 1)
    assert inst.path.n_segments == 3


def test_trial_seed_depends_only_on_seed_and_index():
    a = np.random.default_rng(trial_seed(1, 4)).integers(0, 2**32, 3)
    b = np.random.default_rng(trial_seed(1, 4)).integers(0, 2**32, 3)
    c = np.random.default_rng(trial_seed(1, 5)).integers(0, 2**32, 3)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_generated_ground_instance_is_validated():
    inst = generate(InstanceSpec(kind="ground", dim=3), 2)
    assert validate_order(inst.triple, [2])
    assert ground_bends_down(inst.triple)
    assert dict(inst.expected) == {"d": 2, "index": 0}


def test_ground_generation_gives_up(monkeypatch, rng):
    monkeypatch.setattr("sflow.instances.MAX_ATTEMPTS", 3)
    monkeypatch.setattr("sflow.instances.ground_bends_down", lambda *args, **kwargs: False)
    with pytest.raises(GenerationFailed):
        validated_ground_triple(3, rng)


def test_order_generation_stays_real(rng):
    with warnings.catch_warnings():
        warnings.simplefilter("error", np.exceptions.ComplexWarning)
        t = order_d_triple(3, 4, rng)
    assert validate_order(t, [3])
