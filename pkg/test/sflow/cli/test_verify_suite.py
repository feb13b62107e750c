# -*- coding: utf-8 -*-
from sflow.cli.verify import exit_code, run_trial, verify, worker_count
from sflow.config import DEFAULT_CONFIG
from sflow.instances import Instance, normalization_path


def test_worker_count_respects_cap(monkeypatch):
    monkeypatch.setenv("SFL_THREADS", "1")
    assert worker_count() == 1
    monkeypatch.setenv("SFL_THREADS", "many")
    assert worker_count() >= 1


def test_exit_code():
    assert exit_code({"failures": 0, "errors": 0}) == 0
    assert exit_code({"failures": 0, "errors": 2}) == 3
    assert exit_code({"failures": 1, "errors": 2}) == 4


def test_trial_is_reproducible():
    data = DEFAULT_CONFIG.model_dump()
    first = run_trial(5, 0, data)
    assert first
    assert run_trial(5, 0, data) == first


def test_verify_counts_file_instances():
    inst = Instance(kind="custom-file", lam=0.0, path=normalization_path())
    report = verify(1, 0, instances=[inst], workers=1, show_progress=False)
    assert report["invariants"]["engine_agreement"] == {"passed": 1, "failed": 0, "errors": {}}
    assert exit_code(report) == 0
