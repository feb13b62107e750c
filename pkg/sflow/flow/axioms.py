# -*- coding: utf-8 -*-
"""************************************************************
### Date: 09/05/2026 17:28:44
### LastEditTime: 09/05/2026 19:45:15
### FilePath: //sflow//flow//axioms.py
### Description: Randomized checks of homotopy invariance, constancy,
###              catenation, direct sum and normalisation of the total
###              resonance index.
###
**********************************************************"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from sflow.config import SpectralConfig, resolve
from sflow.core.linalg import random_hermitian
from sflow.errors import NumericalFailure, ResonantVertex
from sflow.flow.engines import total_resonance_index
from sflow.instances import VERTEX_MARGIN, normalization_path, random_path, random_vertex
from sflow.types import HermitianOperator, OperatorPath

LOGGER = logging.getLogger(__name__)

AXIOMS = ("homotopy", "constancy", "catenation", "direct_sum", "normalisation")

# relative size of interior vertex moves in the homotopy trials
_DEFORMATION = 0.3


@dataclass
class AxiomResult:
    name: str
    trials: int = 0
    failures: int = 0
    errors: int = 0
    counterexamples: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "trials": self.trials,
            "failures": self.failures,
            "errors": self.errors,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
        }


@dataclass(frozen=True)
class RsAxiomReport:
    results: Tuple[AxiomResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name: str) -> AxiomResult:
        return next(r for r in self.results if r.name == name)

    def to_dict(self) -> Dict[str, Any]:
        return {r.name: r.to_dict() for r in self.results}


def _tri(path: OperatorPath, lam: float, cfg: SpectralConfig) -> int:
    return total_resonance_index(path, lam, cfg).total


def _payload(path: OperatorPath, lam: float) -> Dict[str, Any]:
    return {"lambda": lam, "vertices": [v.entries.tolist() for v in path.vertices]}


# -----------------------------
# Single trials; each returns (holds, payload)
# -----------------------------


def homotopy_trial(rng: np.random.Generator, cfg: SpectralConfig) -> Tuple[bool, Dict[str, Any]]:
    dim = int(rng.integers(2, 5))
    path, lam = random_path(dim, int(rng.integers(1, 4)), rng)
    moved = [path.start.entries]
    for v in path.vertices[1:-1]:
        moved.append(_perturbed_vertex(v.entries, lam, rng))
    # an extra bend between the last interior vertex and the end
    mid = 0.5 * (path.vertices[-2].entries + path.end.entries)
    moved.append(_perturbed_vertex(mid, lam, rng))
    moved.append(path.end.entries)
    other = OperatorPath.from_arrays(moved)
    a, b = _tri(path, lam, cfg), _tri(other, lam, cfg)
    return a == b, {"path": _payload(path, lam), "deformed": _payload(other, lam), "tri": [a, b]}


def _perturbed_vertex(v: np.ndarray, lam: float, rng: np.random.Generator) -> np.ndarray:
    scale = max(1.0, float(np.linalg.norm(v, 2)))
    for _ in range(100):
        out = v + _DEFORMATION * scale * random_hermitian(v.shape[0], rng)
        if float(np.min(np.abs(np.linalg.eigvalsh(out) - lam))) > VERTEX_MARGIN:
            return out
    raise ResonantVertex("no non-resonant deformation of an interior vertex")


def constancy_trial(rng: np.random.Generator, cfg: SpectralConfig) -> Tuple[bool, Dict[str, Any]]:
    dim = int(rng.integers(1, 6))
    lam = float(rng.uniform(-1.0, 1.0))
    path = OperatorPath.constant(HermitianOperator(random_vertex(dim, lam, rng)), int(rng.integers(2, 4)))
    value = _tri(path, lam, cfg)
    return value == 0, {"path": _payload(path, lam), "tri": value}


def catenation_trial(rng: np.random.Generator, cfg: SpectralConfig) -> Tuple[bool, Dict[str, Any]]:
    dim = int(rng.integers(2, 5))
    f, lam = random_path(dim, int(rng.integers(1, 3)), rng)
    tail, _ = random_path(dim, int(rng.integers(1, 3)), rng, lam=lam)
    g = OperatorPath((f.end,) + tail.vertices[1:])
    joined, a, b = _tri(f.concatenate(g), lam, cfg), _tri(f, lam, cfg), _tri(g, lam, cfg)
    return joined == a + b, {"f": _payload(f, lam), "g": _payload(g, lam), "tri": [joined, a, b]}


def direct_sum_trial(rng: np.random.Generator, cfg: SpectralConfig) -> Tuple[bool, Dict[str, Any]]:
    segments = int(rng.integers(1, 3))
    f, lam = random_path(int(rng.integers(1, 4)), segments, rng)
    g, _ = random_path(int(rng.integers(1, 4)), segments, rng, lam=lam)
    total, a, b = _tri(f.direct_sum(g), lam, cfg), _tri(f, lam, cfg), _tri(g, lam, cfg)
    return total == a + b, {"f": _payload(f, lam), "g": _payload(g, lam), "tri": [total, a, b]}


def normalisation_trial(rng: np.random.Generator, cfg: SpectralConfig) -> Tuple[bool, Dict[str, Any]]:
    lam = float(rng.uniform(-1.0, 1.0))
    a = lam - float(rng.uniform(0.1, 2.0))
    b = lam + float(rng.uniform(0.1, 2.0))
    path = normalization_path(a, b)
    value = _tri(path, lam, cfg)
    return value == 1, {"path": _payload(path, lam), "tri": value}


TRIALS: Dict[str, Callable[[np.random.Generator, SpectralConfig], Tuple[bool, Dict[str, Any]]]] = {
    "homotopy": homotopy_trial,
    "constancy": constancy_trial,
    "catenation": catenation_trial,
    "direct_sum": direct_sum_trial,
    "normalisation": normalisation_trial,
}


def rs_axiom_suite(
    config: Optional[SpectralConfig] = None,
    seed: Optional[int] = None,
    trials: int = 50,
) -> RsAxiomReport:
    """`trials` seeded trials of every axiom; numerical failures are counted
    separately from violations."""
    cfg = resolve(config)
    seed = cfg.seed if seed is None else int(seed)
    results = []
    for k, name in enumerate(AXIOMS):
        result = AxiomResult(name=name)
        for i in range(trials):
            rng = np.random.default_rng(np.random.SeedSequence([seed, k, i]))
            result.trials += 1
            try:
                holds, payload = TRIALS[name](rng, cfg)
            except NumericalFailure as err:
                result.errors += 1
                LOGGER.warning("%s trial %d: %s", name, i, err)
                continue
            if not holds:
                result.failures += 1
                result.counterexamples.append(payload)
                LOGGER.warning("%s violated on trial %d: %s", name, i, payload.get("tri"))
        LOGGER.debug("%s: %d/%d failures", name, result.failures, result.trials)
        results.append(result)
    return RsAxiomReport(results=tuple(results))
