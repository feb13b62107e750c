# -*- coding: utf-8 -*-
"""************************************************************
### Date: 08/16/2026 15:18:54
### LastEditTime: 08/16/2026 16:35:25
### FilePath: //sflow//cli//io.py
### Description: Triple and path files, and deterministic JSON emission with
###              17 significant digits.
###
**********************************************************"""
from __future__ import annotations

import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np

from sflow.errors import InputError, SchemaError
from sflow.instances import DEFAULT_INTERVAL, Instance
from sflow.types import Direction, HermitianOperator, OperatorPath, Triple

LOGGER = logging.getLogger(__name__)

PathLike = Union[str, Path]


# -----------------------------
# Reading
# -----------------------------


def _load(path: PathLike) -> Dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as err:
        raise SchemaError(f"{path}: invalid JSON ({err.msg} at line {err.lineno})") from err
    except OSError as err:
        raise SchemaError(f"{path}: {err.strerror}") from err
    if not isinstance(data, dict):
        raise SchemaError(f"{path}: top level must be an object")
    return data


def _entry(value: Any) -> complex:
    if isinstance(value, bool):
        raise SchemaError("matrix entries must be numbers or [re, im] pairs")
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, list) and len(value) == 2 and all(isinstance(v, (int, float)) for v in value):
        return complex(value[0], value[1])
    raise SchemaError(f"bad matrix entry {value!r}")


def parse_matrix(value: Any, name: str) -> np.ndarray:
    if not isinstance(value, list) or not value or not all(isinstance(row, list) for row in value):
        raise SchemaError(f"{name} must be a non-empty list of rows")
    n = len(value)
    if any(len(row) != n for row in value):
        raise SchemaError(f"{name} must be square")
    m = np.array([[_entry(x) for x in row] for row in value], dtype=complex)
    return m.real.copy() if not np.any(m.imag) else m


def _lambda(data: Dict[str, Any], override: Optional[float]) -> float:
    if override is not None:
        return float(override)
    if "lambda" not in data or isinstance(data["lambda"], bool) or not isinstance(data["lambda"], (int, float)):
        raise SchemaError("missing numeric 'lambda'")
    return float(data["lambda"])


def read_triple(path: PathLike, lam: Optional[float] = None) -> Tuple[Triple, Tuple[float, float]]:
    """Triple file {"lambda", "H", "V", "interval"?}."""
    data = _load(path)
    for key in ("H", "V"):
        if key not in data:
            raise SchemaError(f"{path}: missing '{key}'")
    interval = data.get("interval", list(DEFAULT_INTERVAL))
    ok = isinstance(interval, list) and len(interval) == 2 and all(isinstance(x, (int, float)) for x in interval)
    if not ok or interval[0] >= interval[1]:
        raise SchemaError(f"{path}: interval must be [a, b] with a < b")
    t = Triple(
        _lambda(data, lam),
        HermitianOperator(parse_matrix(data["H"], "H")),
        Direction(parse_matrix(data["V"], "V")),
    )
    return t, (float(interval[0]), float(interval[1]))


def read_path(path: PathLike, lam: Optional[float] = None) -> Tuple[OperatorPath, float]:
    """Path file {"lambda", "vertices": [matrix, ...]}."""
    data = _load(path)
    vertices = data.get("vertices")
    if not isinstance(vertices, list) or len(vertices) < 2:
        raise SchemaError(f"{path}: 'vertices' must list at least two matrices")
    arrays = [parse_matrix(v, f"vertex {k}") for k, v in enumerate(vertices)]
    return OperatorPath.from_arrays(arrays), _lambda(data, lam)


def read_instance(path: PathLike) -> Instance:
    """Either file kind, recognised by its keys."""
    data = _load(path)
    if "vertices" in data:
        p, lam = read_path(path)
        return Instance(kind="custom-file", lam=lam, path=p)
    t, interval = read_triple(path)
    return Instance(kind="custom-file", lam=t.lam, triple=t, interval=interval)


# -----------------------------
# Writing
# -----------------------------


def _number(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    return f"{x:.17g}"


def encode(obj: Any) -> Any:
    """Plain JSON values; complex numbers become [re, im]."""
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return encode(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    if obj is None or isinstance(obj, str):
        return obj
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _dump(value: Any, indent: int, level: int, out: List[str]) -> None:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(value, dict):
        if not value:
            out.append("{}")
            return
        out.append("{\n")
        for k, (key, item) in enumerate(value.items()):
            out.append(f"{pad}{json.dumps(key)}: ")
            _dump(item, indent, level + 1, out)
            out.append(",\n" if k + 1 < len(value) else "\n")
        out.append(end + "}")
    elif isinstance(value, list):
        if not value:
            out.append("[]")
        elif all(not isinstance(v, (dict, list)) for v in value):
            out.append("[")
            for k, item in enumerate(value):
                _dump(item, indent, level, out)
                if k + 1 < len(value):
                    out.append(", ")
            out.append("]")
        else:
            out.append("[\n")
            for k, item in enumerate(value):
                out.append(pad)
                _dump(item, indent, level + 1, out)
                out.append(",\n" if k + 1 < len(value) else "\n")
            out.append(end + "]")
    elif isinstance(value, float):
        out.append(_number(value))
    else:
        out.append(json.dumps(value))


def to_json(obj: Any, indent: int = 2) -> str:
    """Deterministic JSON with every float printed to 17 significant digits."""
    out: List[str] = []
    _dump(encode(obj), indent, 0, out)
    return "".join(out) + "\n"


def matrix_payload(m: np.ndarray) -> List[List[Any]]:
    m = np.asarray(m)
    if np.iscomplexobj(m) and np.any(m.imag):
        return [[[float(x.real), float(x.imag)] for x in row] for row in m]
    return [[float(x) for x in row] for row in m.real]


def instance_payload(instance: Instance) -> Dict[str, Any]:
    if instance.path is not None:
        return {
            "lambda": instance.lam,
            "vertices": [matrix_payload(v.entries) for v in instance.path.vertices],
        }
    if instance.triple is None:
        raise InputError("instance holds neither a triple nor a path")
    t = instance.triple
    payload = {
        "lambda": t.lam,
        "H": matrix_payload(t.H.entries),
        "V": matrix_payload(t.V.entries),
        "interval": list(instance.interval),
    }
    if instance.point is not None:
        payload["r"] = instance.point
    if instance.expected:
        payload["expected"] = dict(instance.expected)
    return payload


def emit(text: str, out: Optional[PathLike] = None) -> Optional[Path]:
    """Write to `out`, or to stdout when it is None."""
    if out is None:
        print(text, end="")
        return None
    target = Path(out)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")
    LOGGER.info("wrote %s", target)
    return target
