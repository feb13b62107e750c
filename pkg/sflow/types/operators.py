# -*- coding: utf-8 -*-
"""************************************************************
### Date: 08/22/2026 15:30:30
### LastEditTime: 08/22/2026 16:47:01
### FilePath: //sflow//types//operators.py
### Description: Value types: Hermitian operators, directions, triples,
###              piecewise linear paths and spectra.
###
**********************************************************"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, List, Sequence, Tuple

import numpy as np
import scipy.linalg

from sflow.config import DEFAULT_CONFIG
from sflow.errors import DimensionMismatch, NotHermitian, SchemaError


def _frozen_array(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex, copy=True)
    a.setflags(write=False)
    return a


# -----------------------------
# Operators
# -----------------------------


@dataclass(frozen=True, eq=False)
class HermitianOperator:
    """Finite-dimensional self-adjoint matrix, Hermitized at construction."""

    entries: np.ndarray
    herm_tol: float = field(default=DEFAULT_CONFIG.tolerances.herm_tol, repr=False)

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
            raise SchemaError(f"expected a non-empty square matrix, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise SchemaError("matrix has non-finite entries")
        fro = np.linalg.norm(m)
        defect = np.linalg.norm(m - m.conj().T)
        if defect > self.herm_tol * max(1.0, fro):
            raise NotHermitian(
                f"||M - M*||_F = {defect:.3e} exceeds tolerance",
                {"defect": float(defect), "norm": float(fro)},
            )
        object.__setattr__(self, "entries", _frozen_array((m + m.conj().T) / 2))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def norm(self) -> float:
        """Spectral norm."""
        return float(np.linalg.norm(self.entries, 2))

    @property
    def is_real(self) -> bool:
        return bool(np.all(self.entries.imag == 0))

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.entries, dtype=dtype)

    def __neg__(self):
        return type(self)(-self.entries)

    def shifted(self, other: "HermitianOperator", s: float) -> "HermitianOperator":
        """self + s·other for real s."""
        if other.dim != self.dim:
            raise DimensionMismatch(f"dims {self.dim} and {other.dim}")
        return HermitianOperator(self.entries + float(s) * other.entries)

    def conjugated(self, unitary: np.ndarray) -> "HermitianOperator":
        return type(self)(unitary @ self.entries @ unitary.conj().T)

    @classmethod
    def diag(cls, values: Sequence[float]):
        return cls(np.diag(np.asarray(values, dtype=float)))


class Direction(HermitianOperator):
    """Self-adjoint perturbation direction V (or W)."""


# -----------------------------
# Triples and paths
# -----------------------------


@dataclass(frozen=True, eq=False)
class Triple:
    """(lambda; H, V): threshold, base operator and direction."""

    lam: float
    H: HermitianOperator
    V: Direction

    def __post_init__(self):
        if not np.isfinite(self.lam):
            raise SchemaError("lambda must be finite")
        object.__setattr__(self, "lam", float(self.lam))
        if not isinstance(self.V, Direction):
            object.__setattr__(self, "V", Direction(self.V.entries))
        if self.H.dim != self.V.dim:
            raise DimensionMismatch(f"H is {self.H.dim}x{self.H.dim}, V is {self.V.dim}x{self.V.dim}")

    @property
    def dim(self) -> int:
        return self.H.dim

    @property
    def scale(self) -> float:
        return 1.0 + self.H.norm + self.V.norm

    def at(self, s: complex) -> np.ndarray:
        """H + sV as a plain matrix (not Hermitian for non-real s)."""
        return self.H.entries + s * self.V.entries

    def operator_at(self, r: float) -> HermitianOperator:
        return self.H.shifted(self.V, r)

    def recentered(self, r: float) -> "Triple":
        """Same line with the coupling origin moved to r."""
        return Triple(self.lam, self.operator_at(r), self.V)

    def with_direction(self, V: np.ndarray) -> "Triple":
        return Triple(self.lam, self.H, Direction(V))

    def negated(self) -> "Triple":
        return Triple(self.lam, self.H, -self.V)


@dataclass(frozen=True, eq=False)
class OperatorPath:
    """Continuous piecewise linear path through the given vertices."""

    vertices: Tuple[HermitianOperator, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        if len(vs) < 2:
            raise SchemaError("a path needs at least two vertices")
        dims = {v.dim for v in vs}
        if len(dims) != 1:
            raise DimensionMismatch(f"vertex dimensions differ: {sorted(dims)}")
        object.__setattr__(self, "vertices", vs)

    @property
    def dim(self) -> int:
        return self.vertices[0].dim

    @property
    def start(self) -> HermitianOperator:
        return self.vertices[0]

    @property
    def end(self) -> HermitianOperator:
        return self.vertices[-1]

    @property
    def n_segments(self) -> int:
        return len(self.vertices) - 1

    def direction(self, j: int) -> Direction:
        return Direction(self.vertices[j + 1].entries - self.vertices[j].entries)

    def segment(self, j: int, lam: float) -> Triple:
        """Segment j as the triple (lam; H_j, H_{j+1} - H_j) on r in [0, 1]."""
        return Triple(lam, self.vertices[j], self.direction(j))

    def segments(self, lam: float) -> Iterator[Triple]:
        for j in range(self.n_segments):
            yield self.segment(j, lam)

    def point(self, j: int, r: float) -> HermitianOperator:
        return self.vertices[j].shifted(self.direction(j), r)

    def reversed(self) -> "OperatorPath":
        return OperatorPath(self.vertices[::-1])

    def concatenate(self, other: "OperatorPath") -> "OperatorPath":
        gap = np.linalg.norm(self.end.entries - other.start.entries)
        if gap > 1e-12 * max(1.0, self.end.norm):
            raise SchemaError("paths do not share an endpoint")
        return OperatorPath(self.vertices + other.vertices[1:])

    def split(self, j: int, r: float) -> Tuple["OperatorPath", "OperatorPath"]:
        """Cut segment j at parameter r in (0, 1)."""
        mid = self.point(j, r)
        head = self.vertices[: j + 1] + (mid,)
        tail = (mid,) + self.vertices[j + 1 :]
        return OperatorPath(head), OperatorPath(tail)

    def direct_sum(self, other: "OperatorPath") -> "OperatorPath":
        if self.n_segments != other.n_segments:
            raise SchemaError("direct sum needs paths with the same number of segments")
        return OperatorPath(
            tuple(
                HermitianOperator(scipy.linalg.block_diag(a.entries, b.entries))
                for a, b in zip(self.vertices, other.vertices)
            )
        )

    @classmethod
    def constant(cls, H: HermitianOperator, n_vertices: int = 2) -> "OperatorPath":
        return cls(tuple(H for _ in range(n_vertices)))

    @classmethod
    def from_arrays(cls, arrays: Sequence[np.ndarray]) -> "OperatorPath":
        return cls(tuple(HermitianOperator(np.asarray(a)) for a in arrays))


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Ascending eigenvalues with unitary eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def near(self, value: float, radius: float) -> List[int]:
        return [k for k, e in enumerate(self.eigenvalues) if abs(e - value) <= radius]
