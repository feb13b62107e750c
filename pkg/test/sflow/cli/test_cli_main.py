# -*- coding: utf-8 -*-
import json

import pytest

from sflow.cli.main import build_config, build_parser, main
from utils.checksum import verify_md5


def _write(tmp_path, name, payload):
    target = tmp_path / name
    target.write_text(json.dumps(payload), encoding="utf-8")
    return str(target)


@pytest.fixture
def uturn_file(tmp_path):
    return _write(
        tmp_path,
        "uturn.json",
        {"lambda": 1.0, "H": [[0, 1], [1, 0]], "V": [[1, 0], [0, -1]], "interval": [-0.5, 0.5]},
    )


@pytest.fixture
def path_file(tmp_path):
    return _write(tmp_path, "path.json", {"lambda": 0.0, "vertices": [[[1, 0], [0, -1]], [[3, 0], [0, 1]]]})


def test_flow_command(tmp_path, path_file):
    out = tmp_path / "flow.json"
    assert main(["flow", path_file, "--out", str(out), "-q"]) == 0
    report = json.loads(out.read_text())
    assert (report["tri"], report["intersection"], report["endpoint"], report["fredholm"]) == (1, 1, 1, 1)
    assert abs(report["ssf"] - 1.0) < 0.1


def test_flow_lambda_override(tmp_path, path_file):
    out = tmp_path / "flow.json"
    assert main(["flow", path_file, "--lambda", "5", "--out", str(out), "-q"]) == 0
    assert json.loads(out.read_text())["tri"] == 0


def test_analyze_command(tmp_path, uturn_file):
    out = tmp_path / "analyze.json"
    assert main(["analyze", uturn_file, "--out", str(out), "--digest", "-q"]) == 0
    report = json.loads(out.read_text())
    (point,) = report["points"]
    assert (point["N"], point["m"], point["d"], point["index"], point["signature"]) == (2, 1, 2, 0, 0)
    assert point["jordan"] == [2]
    assert point["tangency"] == 2
    assert point["checks"]["branch_cross_check"] is True
    assert report["agreement"] is True
    assert verify_md5(str(out))


def test_cycles_and_tangency_write_csv(capsys, uturn_file):
    assert main(["cycles", uturn_file, "-q"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "theta,j,re,im"
    assert main(["tangency", uturn_file, "--r", "0", "-q"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "s,t,t_secular"


def test_gen_then_analyze(tmp_path):
    out = tmp_path / "gen.json"
    assert main(["gen", "--kind", "order_d", "--d", "3", "--canonical", "--seed", "1", "--out", str(out), "-q"]) == 0
    data = json.loads(out.read_text())
    assert data["expected"]["d"] == 3
    report = tmp_path / "report.json"
    assert main(["analyze", str(out), "--out", str(report), "-q"]) == 0
    (point,) = json.loads(report.read_text())["points"]
    assert point["d"] == 3 and point["index"] == 1


def test_gen_and_verify_need_a_seed():
    assert main(["gen", "--kind", "uturn", "-q"]) == 2
    assert main(["verify", "--trials", "0", "-q"]) == 2


def test_verify_without_trials(tmp_path, path_file):
    out = tmp_path / "verify.json"
    directory = tmp_path
    code = main(["verify", "--seed", "3", "--trials", "0", "--instances", str(directory), "--workers", "1",
                 "--out", str(out), "-q"])
    report = json.loads(out.read_text())
    assert code == 0
    assert report["failures"] == 0
    assert report["invariants"]["engine_agreement"]["passed"] == 1


def test_input_errors_exit_two(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    assert main(["flow", str(broken), "-q"]) == 2
    nh = _write(tmp_path, "nh.json", {"lambda": 0, "vertices": [[[0, 1], [0, 0]], [[1, 0], [0, 1]]]})
    assert main(["flow", nh, "-q"]) == 2
    assert main(["flow", str(tmp_path / "absent.json"), "-q"]) == 2


def test_resonant_vertex_exits_three(tmp_path):
    f = _write(tmp_path, "res.json", {"lambda": 0.0, "vertices": [[[0.0]], [[1.0]]]})
    assert main(["flow", f, "-q"]) == 3


def test_bad_config_exits_two(tmp_path, path_file):
    cfg = tmp_path / "cfg.yaml"
    cfg.write_text("tolerances:\n  riesz_tol: -1\n", encoding="utf-8")
    assert main(["flow", path_file, "--config", str(cfg), "-q"]) == 2


def test_config_flags_override_the_file(tmp_path):
    cfg = tmp_path / "cfg.yaml"
    cfg.write_text("contour:\n  nodes: 32\nseed: 4\n", encoding="utf-8")
    args = build_parser().parse_args(["flow", "x.json", "--config", str(cfg), "--y0", "0.05", "--seed", "9"])
    built = build_config(args)
    assert built.contour.nodes == 32
    assert built.seed == 9
    assert built.schedules.y_schedule[0] == pytest.approx(0.05)
    assert built.schedules.y_schedule[1] == pytest.approx(0.005)
