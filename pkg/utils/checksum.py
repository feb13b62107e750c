# -*- coding: utf-8 -*-
"""MD5 sidecar files for reports: `<report>.md5` holds the digest and the file name."""
import hashlib
import logging
import re
from pathlib import Path
from typing import Union

LOGGER = logging.getLogger(__name__)

_MD5_RE = re.compile(r"\b[a-fA-F0-9]{32}\b")

PathLike = Union[str, Path]


def read_expected_md5(md5_file_path: PathLike) -> str:
    path = Path(md5_file_path)
    if not path.is_file():
        raise FileNotFoundError(str(path))
    match = _MD5_RE.search(path.read_text(encoding="utf-8"))
    if not match:
        raise ValueError(f"no MD5 hash found in {path}")
    return match.group(0).lower()


def compute_md5(file_path: PathLike, chunk_size: int = 1024 * 1024) -> str:
    path = Path(file_path)
    if not path.is_file():
        raise FileNotFoundError(str(path))
    md5 = hashlib.md5()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(chunk_size), b""):
            md5.update(chunk)
    return md5.hexdigest()


def digest_path(file_path: PathLike) -> Path:
    return Path(f"{file_path}.md5")


def write_digest(file_path: PathLike) -> Path:
    """Write `<file>.md5` in md5sum format and return its path."""
    target = digest_path(file_path)
    target.write_text(f"{compute_md5(file_path)}  {Path(file_path).name}\n", encoding="utf-8")
    LOGGER.debug("digest written to %s", target)
    return target


def verify_md5(file_path: PathLike, md5_file_path: PathLike = None) -> bool:
    """True when the file matches the digest in `md5_file_path` (default: its sidecar)."""
    expected = read_expected_md5(digest_path(file_path) if md5_file_path is None else md5_file_path)
    actual = compute_md5(file_path)
    if actual != expected:
        LOGGER.warning("%s: digest %s, expected %s", file_path, actual, expected)
    return actual == expected
