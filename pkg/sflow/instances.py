# -*- coding: utf-8 -*-
"""************************************************************
### Date: 10/27/2026 16:59:07
### LastEditTime: 10/27/2026 19:16:38
### FilePath: //sflow//instances.py
### Description: Seeded generators of triples and paths with known structure:
###              random instances, U-turn, prescribed-order (m = 1) triples,
###              unitary-mixed direct sums and ground-state events.
###
**********************************************************"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Literal, Mapping, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy.optimize import least_squares

from sflow.config import SpectralConfig, resolve
from sflow.core.linalg import random_hermitian
from sflow.eigenpath.branches import eigen_branches
from sflow.errors import GenerationFailed, NumericalFailure
from sflow.riesz.calculus import jordan_profile, riesz_pair
from sflow.types import Direction, HermitianOperator, OperatorPath, Triple

LOGGER = logging.getLogger(__name__)

MAX_ATTEMPTS = 100
# eigenvalue distance from lambda kept at generated vertices and endpoints
VERTEX_MARGIN = 1e-2
DEFAULT_INTERVAL = (-1.0, 1.0)

InstanceKind = Literal["random", "uturn", "order_d", "direct_sum", "ground", "custom-file"]


class InstanceSpec(BaseModel):
    """What `gen` should produce."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: InstanceKind
    dim: int = Field(3, ge=1, le=64)
    d: Optional[int] = Field(None, ge=1, le=5)
    orders: Tuple[int, ...] = ()
    segments: int = Field(0, ge=0, le=16)
    canonical: bool = False

    @model_validator(mode="after")
    def _targets(self) -> "InstanceSpec":
        if self.kind == "order_d":
            if self.d is None:
                raise ValueError("order_d needs d")
            if self.dim < self.d:
                raise ValueError(f"order_d with d={self.d} needs dim >= {self.d}")
        if self.kind == "direct_sum" and not 1 <= len(self.orders) <= 3:
            raise ValueError("direct_sum needs one to three block orders")
        if any(not 1 <= k <= 4 for k in self.orders):
            raise ValueError("direct_sum block orders must lie in 1..4")
        return self


@dataclass(frozen=True, eq=False)
class Instance:
    """A triple (with its interval and known resonance point) or a path."""

    kind: str
    lam: float
    triple: Optional[Triple] = None
    interval: Tuple[float, float] = DEFAULT_INTERVAL
    point: Optional[float] = None
    path: Optional[OperatorPath] = None
    expected: Mapping[str, Any] = field(default_factory=dict)


def _rng(rng: Optional[np.random.Generator], seed: int = 0) -> np.random.Generator:
    return np.random.default_rng(seed) if rng is None else rng


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = scipy.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def _gap(H: np.ndarray, lam: float) -> float:
    return float(np.min(np.abs(scipy.linalg.eigvalsh(H) - lam)))


def det_residual(t: Triple, poly: Callable[[complex], complex], samples: Sequence[complex]) -> float:
    """max |det(H + sV - lambda) - poly(s)| over the samples."""
    eye = np.eye(t.dim)
    return max(abs(complex(np.linalg.det(t.at(s) - t.lam * eye)) - poly(s)) for s in samples)


# -----------------------------
# Closed-form instances
# -----------------------------


def uturn_triple() -> Triple:
    """H + rV = [[r, 1], [1, -r]] with lambda = 1 touching at r = 0."""
    return Triple(1.0, HermitianOperator(np.array([[0.0, 1.0], [1.0, 0.0]])), Direction(np.diag([1.0, -1.0])))


def order3_triple() -> Triple:
    """det(H + sV) = -s^3 at lambda = 0."""
    H = np.diag([0.0, 1.0, -1.0])
    V = np.array([[0.0, 1.0, 1.0], [1.0, 1.0, 0.0], [1.0, 0.0, 0.0]])
    return Triple(0.0, HermitianOperator(H), Direction(V))


def decoupled_pair() -> Triple:
    """Two order-one crossings of opposite sign at r = 0, m = 2."""
    return Triple(0.0, HermitianOperator.diag([0.0, 0.0, 1.0]), Direction(np.diag([1.0, -1.0, 1.0])))


def normalization_path(a: float = -1.0, b: float = 1.0) -> OperatorPath:
    """The 1x1 path r -> r through lambda = 0."""
    return OperatorPath.from_arrays([np.array([[a]]), np.array([[b]])])


def diagonal_path() -> OperatorPath:
    """diag(1, -1) + rI for r in [-2, 2]; two up-crossings of lambda = 0."""
    return OperatorPath.from_arrays([np.diag([1.0, -1.0]) + r * np.eye(2) for r in (-2.0, 2.0)])


def uturn_path() -> OperatorPath:
    """The U-turn family on r in [-1, 1]; flow 0 at lambda = 1."""
    t = uturn_triple()
    return OperatorPath.from_arrays([t.at(-1.0).real, t.at(1.0).real])


# -----------------------------
# Random instances
# -----------------------------


def random_vertex(dim: int, lam: float, rng: np.random.Generator, margin: float = VERTEX_MARGIN) -> np.ndarray:
    for _ in range(MAX_ATTEMPTS):
        H = random_hermitian(dim, rng)
        if _gap(H, lam) > margin:
            return H
    raise GenerationFailed(f"no vertex with spectrum {margin} away from lambda={lam}")


def random_path(
    dim: int,
    segments: int,
    rng: np.random.Generator,
    lam: Optional[float] = None,
    margin: float = VERTEX_MARGIN,
) -> Tuple[OperatorPath, float]:
    """Piecewise linear path through random Hermitian vertices, all non-resonant at lambda."""
    lam = float(rng.uniform(-1.0, 1.0)) if lam is None else float(lam)
    vertices = [random_vertex(dim, lam, rng, margin) for _ in range(segments + 1)]
    return OperatorPath.from_arrays(vertices), lam


def random_resonant_triple(
    dim: int,
    rng: np.random.Generator,
    interval: Tuple[float, float] = DEFAULT_INTERVAL,
    margin: float = VERTEX_MARGIN,
) -> Instance:
    """Random H, V with lambda chosen as an eigenvalue of H + r0 V, r0 inside the interval."""
    a, b = interval
    for _ in range(MAX_ATTEMPTS):
        H, V = random_hermitian(dim, rng), random_hermitian(dim, rng)
        r0 = float(rng.uniform(a + 0.25 * (b - a), b - 0.25 * (b - a)))
        w = scipy.linalg.eigvalsh(H + r0 * V)
        k = int(rng.integers(dim))
        lam = float(w[k])
        if dim > 1 and float(np.min(np.abs(np.delete(w, k) - lam))) < margin:
            continue
        if min(_gap(H + a * V, lam), _gap(H + b * V, lam)) <= margin:
            continue
        t = Triple(lam, HermitianOperator(H), Direction(V))
        return Instance(kind="random", lam=lam, triple=t, interval=(a, b), point=r0)
    raise GenerationFailed(f"no random triple of dim {dim} with non-resonant endpoints")


# -----------------------------
# Prescribed order
# -----------------------------


def _order_coefficients(h: np.ndarray, v: np.ndarray, vhat: np.ndarray, count: int) -> np.ndarray:
    """c_j = <(R V)^j R v, v> for j < count, with R = diag(h)^{-1}."""
    rinv = 1.0 / h
    x = rinv * v
    out = [float(v @ x)]
    for _ in range(1, count):
        x = rinv * (vhat @ x)
        out.append(float(v @ x))
    return np.array(out)


def _assemble(h: np.ndarray, v: np.ndarray, vhat: np.ndarray, alpha: float = 0.0) -> Triple:
    n = h.size + 1
    H = np.zeros((n, n))
    H[1:, 1:] = np.diag(h)
    V = np.zeros((n, n))
    V[0, 0] = alpha
    V[0, 1:] = v
    V[1:, 0] = v
    V[1:, 1:] = vhat
    return Triple(0.0, HermitianOperator(H), Direction(V))


def _symmetric(params: np.ndarray, k: int) -> np.ndarray:
    m = np.zeros((k, k))
    m[np.triu_indices(k)] = params
    return m + np.triu(m, 1).T


def _alternating(k: int, rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
    """Eigenvalues of alternating sign and weights with sum v_i^2 / h_i = 0."""
    mags = rng.uniform(0.5, 2.0, k)
    h = mags * np.array([(-1.0) ** i for i in range(k)])
    v = rng.uniform(0.5, 1.5, k)
    head = float(np.sum(v[:-1] ** 2 / h[:-1]))
    h[-1] = -np.sign(head) * mags[-1]
    v[-1] = np.sqrt(abs(head) * mags[-1])
    return h, v


def _order_candidate(d: int, dim: int, rng: np.random.Generator) -> Triple:
    k = dim - 1
    if d == 1:
        h = rng.uniform(0.5, 2.0, k) * rng.choice([-1.0, 1.0], k)
        return _assemble(h, rng.uniform(-1, 1, k), random_hermitian(k, rng, complex_entries=False), alpha=1.0)
    if d == 2:
        h = rng.uniform(0.5, 2.0, k)
        return _assemble(h, rng.uniform(0.5, 1.5, k), random_hermitian(k, rng, complex_entries=False))
    h, v = _alternating(k, rng)
    size = k * (k + 1) // 2

    def residual(params: np.ndarray) -> np.ndarray:
        return _order_coefficients(h, v, _symmetric(params, k), d - 2)[1:]

    start = rng.uniform(-1, 1, size)
    if d == 3:
        return _assemble(h, v, _symmetric(start, k))
    fit = least_squares(residual, start, method="trf", xtol=1e-15, ftol=1e-15, gtol=1e-15)
    if np.max(np.abs(fit.fun)) > 1e-12:
        raise GenerationFailed(f"order conditions not met ({np.max(np.abs(fit.fun)):.3e})")
    return _assemble(h, v, _symmetric(fit.x, k))


def _leading_nonzero(t: Triple, d: int) -> bool:
    if d <= 2:
        return True
    n = t.dim
    h = np.diag(t.H.entries)[1:].real
    v = t.V.entries[0, 1:].real
    vhat = t.V.entries[1:, 1:].real
    c = _order_coefficients(h, v, vhat, d - 1)
    return abs(c[-1]) > 1e-3 * max(1.0, float(np.linalg.norm(t.V.entries)) ** (d - 1)) and n >= d


def validate_order(t: Triple, sizes: Sequence[int], config: Optional[SpectralConfig] = None) -> bool:
    """Jordan sizes of the resonance point r = 0 equal `sizes`."""
    cfg = resolve(config)
    try:
        profile = jordan_profile(riesz_pair(t, 0.0, config=cfg), cfg)
    except NumericalFailure as err:
        LOGGER.debug("structure check failed: %s", err)
        return False
    return sorted(profile.sizes) == sorted(sizes)


def order_d_triple(
    d: int,
    dim: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
    config: Optional[SpectralConfig] = None,
) -> Triple:
    """A triple whose resonance point r = 0 at lambda = 0 has m = 1 and order d.

    Without `rng` the canonical instance is returned: the documented order-3
    triple for d = dim = 3, otherwise the first valid draw of seed 0.
    """
    dim = d if dim is None else dim
    if dim < d or (d >= 2 and dim < 2):
        raise GenerationFailed(f"order {d} needs dimension at least {max(d, 2)}")
    if rng is None and d == 3 and dim == 3:
        return order3_triple()
    gen = _rng(rng)
    for attempt in range(MAX_ATTEMPTS):
        try:
            t = _order_candidate(d, dim, gen)
        except GenerationFailed as err:
            LOGGER.debug("attempt %d: %s", attempt, err)
            continue
        if _leading_nonzero(t, d) and validate_order(t, [d], config):
            LOGGER.debug("order-%d triple after %d attempts", d, attempt + 1)
            return t
    raise GenerationFailed(f"no order-{d} triple of dimension {dim} after {MAX_ATTEMPTS} attempts")


def direct_sum_triple(
    orders: Sequence[int],
    rng: Optional[np.random.Generator] = None,
    config: Optional[SpectralConfig] = None,
) -> Triple:
    """Block sum of order-d triples mixed by a random unitary; m = len(orders)."""
    gen = _rng(rng)
    blocks = [order_d_triple(d, max(d, 2), gen, config) for d in orders]
    H = scipy.linalg.block_diag(*[b.H.entries for b in blocks])
    V = scipy.linalg.block_diag(*[b.V.entries for b in blocks])
    u = random_unitary(H.shape[0], gen)
    t = Triple(0.0, HermitianOperator(u @ H @ u.conj().T), Direction(u @ V @ u.conj().T))
    if not validate_order(t, orders, config):
        raise GenerationFailed(f"direct sum of orders {list(orders)} lost its structure")
    return t


def ground_state_triple(dim: int, rng: Optional[np.random.Generator] = None) -> Triple:
    """lambda is the simple lowest eigenvalue of H and <phi_0, V phi_0> = 0,
    so the event at r = 0 has order 2 with the branch bending down."""
    if dim < 2:
        raise GenerationFailed("a ground-state event needs dimension at least 2")
    gen = _rng(rng)
    mu = np.sort(gen.uniform(-1.0, 1.0, dim))
    mu[1:] = np.maximum(mu[1:], mu[0] + 0.2)
    V = random_hermitian(dim, gen)
    V[0, 0] = 0.0
    V[0, 1] = V[1, 0] = 0.5 + abs(V[0, 1])
    u = random_unitary(dim, gen)
    H = u @ np.diag(mu) @ u.conj().T
    return Triple(float(mu[0]), HermitianOperator(H), Direction(u @ V @ u.conj().T))


def ground_bends_down(t: Triple, config: Optional[SpectralConfig] = None) -> bool:
    """Every branch at r = 0 has order at most two, and an order-two branch has lambda'' < 0."""
    branches = eigen_branches(t, 0.0, config=config)
    return all(b.order <= 2 and (b.order < 2 or b.lam_derivs[2] < 0) for b in branches)


def validated_ground_triple(
    dim: int,
    rng: Optional[np.random.Generator] = None,
    config: Optional[SpectralConfig] = None,
) -> Triple:
    """A ground-state triple whose order-two, downward-bending event has been checked."""
    cfg = resolve(config)
    gen = _rng(rng)
    for attempt in range(MAX_ATTEMPTS):
        t = ground_state_triple(dim, gen)
        try:
            if validate_order(t, [2], cfg) and ground_bends_down(t, cfg):
                return t
        except NumericalFailure as err:
            LOGGER.debug("attempt %d: %s", attempt, err)
    raise GenerationFailed(f"no valid ground-state triple of dimension {dim} after {MAX_ATTEMPTS} attempts")


# -----------------------------
# Dispatch
# -----------------------------


UTURN_EXPECTED = {"N": 2, "m": 1, "d": 2, "index": 0, "signature": 0, "cycles": [2], "tangency": 2}
ORDER3_EXPECTED = {"N": 3, "m": 1, "d": 3, "index": 1, "signature": 1, "cycles": [3], "tangency": 3}


def generate(spec: InstanceSpec, seed: int, config: Optional[SpectralConfig] = None) -> Instance:
    """Instance for `spec`, reproducible from `seed` and validated before return."""
    cfg = resolve(config)
    rng = np.random.default_rng(seed)
    if spec.kind == "uturn":
        if spec.segments:
            return Instance(kind="uturn", lam=1.0, path=uturn_path(), expected={"flow": 0})
        return Instance(kind="uturn", lam=1.0, triple=uturn_triple(), point=0.0, expected=UTURN_EXPECTED)
    if spec.kind == "order_d":
        t = order_d_triple(spec.d, spec.dim, None if spec.canonical else rng, cfg)
        expected = dict(ORDER3_EXPECTED) if spec.d == 3 else {"N": spec.d, "m": 1, "d": spec.d}
        return Instance(kind="order_d", lam=0.0, triple=t, point=0.0, expected=expected)
    if spec.kind == "direct_sum":
        t = direct_sum_triple(spec.orders, rng, cfg)
        expected = {"N": sum(spec.orders), "m": len(spec.orders), "sizes": sorted(spec.orders, reverse=True)}
        return Instance(kind="direct_sum", lam=0.0, triple=t, point=0.0, expected=expected)
    if spec.kind == "ground":
        t = validated_ground_triple(spec.dim, rng, cfg)
        return Instance(kind="ground", lam=t.lam, triple=t, point=0.0, expected={"d": 2, "index": 0})
    if spec.kind == "random":
        if spec.segments:
            path, lam = random_path(spec.dim, spec.segments, rng)
            return Instance(kind="random", lam=lam, path=path)
        return random_resonant_triple(spec.dim, rng)
    raise GenerationFailed("custom-file instances are read from disk, not generated")


def trial_seed(seed: int, index: int) -> np.random.SeedSequence:
    """Sub-seed of trial `index`, independent of scheduling order."""
    return np.random.SeedSequence([int(seed), int(index)])


def describe(instance: Instance) -> Dict[str, Any]:
    return {"kind": instance.kind, "lambda": instance.lam, "expected": dict(instance.expected)}
