# -*- coding: utf-8 -*-
import numpy as np
import pytest

from sflow.config import DEFAULT_CONFIG
from sflow.errors import EngineDisagreement
from sflow.flow.report import FlowReport, flow_report


def test_report_on_the_diagonal_path(diag_path):
    report = flow_report(diag_path, 0.0)
    assert (report.tri, report.intersection, report.endpoint, report.fredholm) == (2, 2, 2, 2)
    assert report.agree
    payload = report.to_dict()
    assert payload["agreement"] is True
    assert [row["index"] for row in payload["resonances"]] == [1, 1]
    assert set(payload["checks"]) == {"intersection", "endpoint", "fredholm", "ssf"}


def test_uturn_report_rows(uturn_flow_path):
    report = flow_report(uturn_flow_path, 1.0)
    (row,) = report.resonances
    assert (row.N, row.m, row.index, row.intersection) == (2, 1, 0, 0)
    assert abs(report.ssf) <= DEFAULT_CONFIG.tolerances.ssf_tol


def test_disagreement_is_flagged():
    report = FlowReport(tri=1, intersection=1, endpoint=0, fredholm=1, ssf=1.0, resonances=(), ssf_tol=0.1)
    assert not report.agree
    assert report.agreement["endpoint"] is False


def test_strict_report_raises_on_disagreement(monkeypatch, normalization):
    import sflow.flow.report as module

    monkeypatch.setattr(module, "endpoint_flow", lambda path, lam, cfg: 0)
    with pytest.raises(EngineDisagreement):
        flow_report(normalization, 0.0)
    assert not flow_report(normalization, 0.0, strict=False).agree
