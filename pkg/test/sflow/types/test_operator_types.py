# -*- coding: utf-8 -*-
import numpy as np
import pytest

from sflow.errors import DimensionMismatch, NotHermitian, SchemaError
from sflow.types import Direction, HermitianOperator, OperatorPath, Triple


def test_hermitian_operator_symmetrizes_within_tolerance():
    m = np.array([[1.0, 2.0 + 1e-14], [2.0, 3.0]])
    op = HermitianOperator(m)
    assert np.allclose(op.entries, op.entries.conj().T, atol=0)
    assert op.dim == 2


def test_hermitian_operator_rejects_non_hermitian():
    with pytest.raises(NotHermitian) as info:
        HermitianOperator(np.array([[0.0, 1.0], [0.0, 0.0]]))
    assert info.value.details["defect"] > 0
    assert info.value.exit_code == 2


@pytest.mark.parametrize("bad", [np.zeros((2, 3)), np.zeros((0, 0)), np.array([[np.nan]])])
def test_hermitian_operator_rejects_bad_shapes(bad):
    with pytest.raises(SchemaError):
        HermitianOperator(bad)


def test_entries_are_read_only():
    op = HermitianOperator.diag([1.0, 2.0])
    with pytest.raises(ValueError):
        op.entries[0, 0] = 5.0


def test_triple_dimension_check():
    with pytest.raises(DimensionMismatch):
        Triple(0.0, HermitianOperator.diag([1.0, 2.0]), Direction(np.eye(3)))


def test_triple_line_and_scale():
    t = Triple(0.5, HermitianOperator.diag([1.0, -2.0]), Direction(np.diag([1.0, 1.0])))
    assert np.allclose(t.at(2.0), np.diag([3.0, 0.0]))
    assert np.allclose(t.operator_at(-1.0).entries, np.diag([0.0, -3.0]))
    assert t.scale == pytest.approx(1.0 + 2.0 + 1.0)
    assert np.allclose(t.negated().V.entries, -t.V.entries)
    assert np.allclose(t.recentered(1.0).H.entries, np.diag([2.0, -1.0]))


def test_path_segments_and_points():
    path = OperatorPath.from_arrays([np.diag([-1.0, 1.0]), np.diag([1.0, 1.0]), np.diag([1.0, -1.0])])
    assert path.n_segments == 2
    seg = path.segment(1, 0.0)
    assert np.allclose(seg.V.entries, np.diag([0.0, -2.0]))
    assert np.allclose(path.point(0, 0.5).entries, np.diag([0.0, 1.0]))
    assert np.allclose(path.reversed().start.entries, path.end.entries)


def test_path_split_and_concatenate_round_trip():
    path = OperatorPath.from_arrays([np.diag([-1.0, 2.0]), np.diag([1.0, 2.0])])
    head, tail = path.split(0, 0.25)
    joined = head.concatenate(tail)
    assert joined.n_segments == 2
    assert np.allclose(joined.vertices[1].entries, np.diag([-0.5, 2.0]))


def test_path_concatenate_needs_shared_endpoint():
    a = OperatorPath.from_arrays([np.eye(2), 2 * np.eye(2)])
    b = OperatorPath.from_arrays([3 * np.eye(2), np.eye(2)])
    with pytest.raises(SchemaError):
        a.concatenate(b)


def test_path_direct_sum_is_block_diagonal():
    a = OperatorPath.from_arrays([np.array([[1.0]]), np.array([[2.0]])])
    b = OperatorPath.from_arrays([np.array([[-1.0]]), np.array([[-3.0]])])
    s = a.direct_sum(b)
    assert s.dim == 2
    assert np.allclose(s.end.entries, np.diag([2.0, -3.0]))


def test_path_needs_two_vertices_of_one_dimension():
    with pytest.raises(SchemaError):
        OperatorPath.from_arrays([np.eye(2)])
    with pytest.raises(DimensionMismatch):
        OperatorPath.from_arrays([np.eye(2), np.eye(3)])
