# -*- coding: utf-8 -*-
"""************************************************************
### Date: 10/03/2026 13:44:52
### LastEditTime: 10/03/2026 16:01:23
### FilePath: //sflow//cli//verify.py
### Description: Seeded Monte-Carlo run of the invariant suites over random
###              and structured instances, dispatched to a process pool.
###
**********************************************************"""
from __future__ import annotations

import logging
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np
from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    SpinnerColumn,
    TextColumn,
    TimeRemainingColumn,
)

from sflow.cli.analyze import analyze_point
from sflow.config import SpectralConfig, resolve
from sflow.eigenpath.branches import eigen_branches
from sflow.eigenpath.structure import reconstruct_P
from sflow.errors import CrossCheckFailure, NumericalFailure
from sflow.flow.axioms import AXIOMS, TRIALS
from sflow.flow.report import flow_report
from sflow.flow.stability import stability_check
from sflow.index.engine import as_point
from sflow.instances import (
    Instance,
    direct_sum_triple,
    ground_bends_down,
    ground_state_triple,
    order3_triple,
    order_d_triple,
    random_path,
    random_resonant_triple,
    trial_seed,
    uturn_triple,
)
from sflow.resonance.locator import real_resonance_points_on_segment
from sflow.riesz.calculus import riesz_pair

LOGGER = logging.getLogger(__name__)

MIN_DIM, MAX_DIM = 2, 8
STABILITY_SIZE = 1e-3
# structured instances are analysed on this window around their event at r = 0
LOCAL = (-0.1, 0.1)


@dataclass
class InvariantTally:
    passed: int = 0
    failed: int = 0
    errors: Counter = field(default_factory=Counter)

    def to_dict(self) -> Dict[str, Any]:
        return {"passed": self.passed, "failed": self.failed, "errors": dict(sorted(self.errors.items()))}


Outcome = Dict[str, Any]


def _record(out: Dict[str, Outcome], name: str, check: Callable[[], bool]) -> None:
    """Run one invariant; a numerical failure is an error, a cross-check
    failure a violation."""
    try:
        out[name] = {"ok": bool(check())}
    except CrossCheckFailure as err:
        out[name] = {"ok": False, "error": type(err).__name__}
    except NumericalFailure as err:
        out[name] = {"ok": None, "error": type(err).__name__}


def _point_suite(out: Dict[str, Outcome], inst: Instance, prefix: str, cfg: SpectralConfig) -> None:
    t = inst.triple
    try:
        points = real_resonance_points_on_segment(t.lam, t.H, t.V, inst.interval, cfg)
    except NumericalFailure as err:
        out[f"{prefix}locate"] = {"ok": None, "error": type(err).__name__}
        return
    for p in points:
        rows: Dict[str, Any] = {}

        def run() -> bool:
            rows.update(analyze_point(t, p, cfg))
            return True

        _record(out, f"{prefix}analysis", run)
        for name, ok in rows.get("checks", {}).items():
            prior = out.get(f"{prefix}{name}", {"ok": True})
            out[f"{prefix}{name}"] = {"ok": bool(prior["ok"]) and ok}


def _reconstruction(inst: Instance, cfg: SpectralConfig) -> bool:
    t = inst.triple
    point = as_point(t, inst.point, cfg)
    pair = riesz_pair(t, point, config=cfg)
    rec = reconstruct_P(eigen_branches(t, point.real, config=cfg), t.V.entries, pair)
    p_norm = max(1.0, float(np.linalg.norm(pair.P, 2)))
    return rec.distance <= cfg.tolerances.moment_tol * p_norm and rec.off_block <= cfg.tolerances.ortho_tol * t.scale


def _structured(index: int, rng: np.random.Generator, cfg: SpectralConfig) -> Instance:
    kind = index % 5
    if kind == 0:
        t = order3_triple() if index % 2 else uturn_triple()
        return Instance(kind="closed", lam=t.lam, triple=t, point=0.0, interval=LOCAL)
    if kind == 1:
        d = int(rng.integers(2, 5))
        t = order_d_triple(d, d + int(rng.integers(0, 2)), rng, cfg)
        return Instance(kind="order_d", lam=0.0, triple=t, point=0.0, interval=LOCAL, expected={"d": d})
    if kind == 2:
        orders = list(rng.integers(1, 3, size=int(rng.integers(2, 4))))
        t = direct_sum_triple([int(k) for k in orders], rng, cfg)
        return Instance(kind="direct_sum", lam=0.0, triple=t, point=0.0, interval=LOCAL)
    if kind == 3:
        t = ground_state_triple(int(rng.integers(2, 6)), rng)
        return Instance(kind="ground", lam=t.lam, triple=t, point=0.0, interval=LOCAL, expected={"d": 2})
    d = int(rng.integers(1, 4))
    t = order_d_triple(d, d + 1, rng, cfg)
    return Instance(kind="order_d", lam=0.0, triple=t, point=0.0, interval=LOCAL, expected={"d": d})


def run_trial(seed: int, index: int, config_data: Dict[str, Any]) -> Dict[str, Outcome]:
    """Every suite on the instances of one trial; the sub-seed depends only on
    (seed, index)."""
    cfg = SpectralConfig.model_validate(config_data)
    rng = np.random.default_rng(trial_seed(seed, index))
    dim = MIN_DIM + index % (MAX_DIM - MIN_DIM + 1)
    out: Dict[str, Outcome] = {}

    try:
        inst = random_resonant_triple(dim, rng)
    except NumericalFailure as err:
        out["generate"] = {"ok": None, "error": type(err).__name__}
    else:
        _point_suite(out, inst, "", cfg)
        _record(
            out,
            "stability",
            lambda: stability_check(inst.triple, inst.point, STABILITY_SIZE, 1, rng, cfg).holds,
        )

    try:
        structured = _structured(index, rng, cfg)
    except NumericalFailure as err:
        out["structured:generate"] = {"ok": None, "error": type(err).__name__}
    else:
        _point_suite(out, structured, "structured:", cfg)
        if structured.kind == "ground":
            _record(out, "ground_state", lambda: ground_bends_down(structured.triple, cfg))
        d = structured.expected.get("d")
        if d is not None and d <= 3:
            _record(out, "reconstruction", lambda: _reconstruction(structured, cfg))

    path, lam = random_path(int(rng.integers(2, 7)), int(rng.integers(1, 4)), rng)
    _record(out, "engine_agreement", lambda: flow_report(path, lam, strict=False, config=cfg).agree)

    for name in AXIOMS:
        _record(out, f"axiom:{name}", lambda name=name: TRIALS[name](rng, cfg)[0])
    return out


def run_instances(instances: Sequence[Instance], config_data: Dict[str, Any]) -> Dict[str, Outcome]:
    cfg = SpectralConfig.model_validate(config_data)
    out: Dict[str, Outcome] = {}
    for k, inst in enumerate(instances):
        if inst.triple is not None:
            _point_suite(out, inst, f"file{k}:", cfg)
        else:
            _record(
                out,
                f"file{k}:engine_agreement",
                lambda inst=inst: flow_report(inst.path, inst.lam, strict=False, config=cfg).agree,
            )
    return out


def worker_count() -> int:
    cap = os.environ.get("SFL_THREADS")
    workers = os.cpu_count() or 1
    if cap:
        try:
            workers = max(1, min(workers, int(cap)))
        except ValueError:
            LOGGER.warning("ignoring non-integer SFL_THREADS=%r", cap)
    return workers


def _progress() -> Progress:
    return Progress(
        SpinnerColumn(),
        TextColumn("[bold blue]{task.description}"),
        BarColumn(),
        TextColumn("[progress.percentage]{task.percentage:>3.0f}%"),
        MofNCompleteColumn(),
        TimeRemainingColumn(),
    )


def _tally(results: Sequence[Dict[str, Outcome]]) -> Dict[str, InvariantTally]:
    tally: Dict[str, InvariantTally] = {}
    for outcome in results:
        for name, res in outcome.items():
            key = name.split(":", 1)[-1] if name.startswith("file") else name
            entry = tally.setdefault(key, InvariantTally())
            if res.get("ok") is True:
                entry.passed += 1
            elif res.get("ok") is False:
                entry.failed += 1
            if "error" in res:
                entry.errors[res["error"]] += 1
    return dict(sorted(tally.items()))


def verify(
    seed: int,
    trials: int,
    config: Optional[SpectralConfig] = None,
    instances: Sequence[Instance] = (),
    workers: Optional[int] = None,
    show_progress: bool = True,
) -> Dict[str, Any]:
    """Aggregate report; `failures` counts violated invariants, `errors`
    counts numerical failures."""
    cfg = resolve(config)
    data = cfg.model_dump()
    workers = worker_count() if workers is None else max(1, workers)
    results: List[Optional[Dict[str, Outcome]]] = [None] * trials
    if trials:
        with _progress() as progress:
            task = progress.add_task("verify", total=trials, visible=show_progress)
            if workers == 1:
                for i in range(trials):
                    results[i] = run_trial(seed, i, data)
                    progress.advance(task)
            else:
                with ProcessPoolExecutor(max_workers=workers) as pool:
                    futures = {pool.submit(run_trial, seed, i, data): i for i in range(trials)}
                    for fut in as_completed(futures):
                        results[futures[fut]] = fut.result()
                        progress.advance(task)
    done = [r for r in results if r is not None]
    if instances:
        done.append(run_instances(instances, data))
    tally = _tally(done)
    failures = sum(t.failed for t in tally.values())
    errors = sum(sum(t.errors.values()) for t in tally.values())
    LOGGER.info("verify: %d trials, %d violations, %d numerical errors", trials, failures, errors)
    return {
        "seed": seed,
        "trials": trials,
        "invariants": {k: v.to_dict() for k, v in tally.items()},
        "failures": failures,
        "errors": errors,
    }


def exit_code(report: Dict[str, Any]) -> int:
    if report["failures"]:
        return 4
    if report["errors"]:
        return 3
    return 0
