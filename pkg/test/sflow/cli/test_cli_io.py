# -*- coding: utf-8 -*-
import json

import numpy as np
import pytest

from sflow.cli.io import (
    emit,
    encode,
    instance_payload,
    parse_matrix,
    read_instance,
    read_path,
    read_triple,
    to_json,
)
from sflow.errors import NotHermitian, SchemaError
from sflow.instances import Instance, uturn_triple


def _write(tmp_path, name, payload):
    target = tmp_path / name
    target.write_text(json.dumps(payload) if not isinstance(payload, str) else payload, encoding="utf-8")
    return target


def test_parse_matrix_accepts_complex_pairs():
    m = parse_matrix([[1, [0, 1]], [[0, -1], 2]], "H")
    assert m.dtype == complex
    assert m[0, 1] == 1j
    assert parse_matrix([[1, 2], [2, 1]], "H").dtype == float


@pytest.mark.parametrize("bad", [[], [[1, 2]], [[1, True], [True, 1]], [[1, "x"], ["x", 1]], "nope"])
def test_parse_matrix_rejects(bad):
    with pytest.raises(SchemaError):
        parse_matrix(bad, "H")


def test_read_triple(tmp_path):
    f = _write(tmp_path, "t.json", {"lambda": 1, "H": [[0, 1], [1, 0]], "V": [[1, 0], [0, -1]], "interval": [-0.5, 0.5]})
    t, interval = read_triple(f)
    assert t.lam == 1.0
    assert interval == (-0.5, 0.5)
    t2, _ = read_triple(f, lam=2.0)
    assert t2.lam == 2.0


@pytest.mark.parametrize(
    "payload",
    [
        "{not json",
        [1, 2],
        {"lambda": 0, "H": [[1]]},
        {"H": [[1]], "V": [[1]]},
        {"lambda": 0, "H": [[1]], "V": [[1]], "interval": [1, 0]},
        {"lambda": 0, "H": [[1]], "V": [[1]], "interval": ["a", 1]},
    ],
)
def test_read_triple_rejects_bad_files(tmp_path, payload):
    with pytest.raises(SchemaError):
        read_triple(_write(tmp_path, "bad.json", payload))


def test_read_triple_rejects_non_hermitian(tmp_path):
    f = _write(tmp_path, "nh.json", {"lambda": 0, "H": [[0, 1], [0, 0]], "V": [[1, 0], [0, 1]]})
    with pytest.raises(NotHermitian):
        read_triple(f)


def test_missing_file_is_a_schema_error(tmp_path):
    with pytest.raises(SchemaError):
        read_triple(tmp_path / "absent.json")


def test_read_path_and_instance(tmp_path):
    f = _write(tmp_path, "p.json", {"lambda": 0, "vertices": [[[-1]], [[1]]]})
    path, lam = read_path(f)
    assert path.n_segments == 1 and lam == 0.0
    assert read_instance(f).path is not None
    with pytest.raises(SchemaError):
        read_path(_write(tmp_path, "short.json", {"lambda": 0, "vertices": [[[1]]]}))


def test_json_prints_seventeen_digits():
    text = to_json({"x": 0.1, "bad": float("nan"), "z": 1 + 2j, "a": np.arange(2), "flag": np.bool_(True)})
    data = json.loads(text)
    assert '"x": 0.10000000000000001' in text
    assert data["bad"] is None
    assert data["z"] == [1.0, 2.0]
    assert data["a"] == [0, 1]
    assert data["flag"] is True


def test_encode_rejects_unknown_types():
    with pytest.raises(TypeError):
        encode(object())


def test_instance_payload_round_trip(tmp_path):
    inst = Instance(kind="uturn", lam=1.0, triple=uturn_triple(), point=0.0, interval=(-0.5, 0.5))
    f = tmp_path / "u.json"
    emit(to_json(instance_payload(inst)), f)
    t, interval = read_triple(f)
    assert np.allclose(t.H.entries, inst.triple.H.entries)
    assert interval == (-0.5, 0.5)
    assert json.loads(f.read_text())["r"] == 0.0


def test_emit_to_stdout(capsys):
    assert emit("hello\n") is None
    assert capsys.readouterr().out == "hello\n"
