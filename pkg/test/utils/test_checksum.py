# -*- coding: utf-8 -*-
import hashlib

import pytest

from utils.checksum import compute_md5, digest_path, read_expected_md5, verify_md5, write_digest
from utils.files import get_files_by_extension


@pytest.fixture
def report(tmp_path):
    f = tmp_path / "report.json"
    f.write_text('{"tri": 1}\n', encoding="utf-8")
    return f


def test_compute_md5(report):
    assert compute_md5(report) == hashlib.md5(b'{"tri": 1}\n').hexdigest()
    assert compute_md5(report, chunk_size=3) == compute_md5(report)


def test_write_and_verify(report):
    sidecar = write_digest(report)
    assert sidecar == digest_path(report)
    assert sidecar.read_text(encoding="utf-8").endswith("  report.json\n")
    assert verify_md5(report)
    report.write_text('{"tri": 2}\n', encoding="utf-8")
    assert not verify_md5(report)


def test_read_expected_md5(tmp_path, report):
    other = tmp_path / "digest.txt"
    other.write_text("MD5 (report.json) = " + compute_md5(report).upper(), encoding="utf-8")
    assert read_expected_md5(other) == compute_md5(report)
    assert verify_md5(report, other)
    other.write_text("nothing here", encoding="utf-8")
    with pytest.raises(ValueError):
        read_expected_md5(other)
    with pytest.raises(FileNotFoundError):
        read_expected_md5(tmp_path / "missing.md5")


def test_get_files_by_extension(tmp_path, report):
    (tmp_path / "sub").mkdir()
    (tmp_path / "sub" / "b.json").write_text("{}", encoding="utf-8")
    (tmp_path / "c.yaml").write_text("", encoding="utf-8")
    found = get_files_by_extension(str(tmp_path), "json")
    assert [p.rsplit("/", 1)[-1] for p in found] == ["report.json", "b.json"]
    assert len(get_files_by_extension(str(tmp_path), ".json", exclude_name="b.json")) == 1
    assert get_files_by_extension(str(tmp_path / "nope"), ".json") == []
