# -*- coding: utf-8 -*-
import logging
from pathlib import Path
from typing import List, Optional

LOGGER = logging.getLogger(__name__)


def get_files_by_extension(directory: str, extension: str, exclude_name: Optional[str] = None) -> List[str]:
    """
    Files with the given extension below `directory`, recursively.

    :param directory: directory to search
    :param extension: extension with or without the dot (".json" or "json")
    :param exclude_name: full file name to skip, e.g. "config.json"
    :return: absolute paths, sorted
    """
    ext = f".{extension.lstrip('.')}"

    root_path = Path(directory)
    if not root_path.is_dir():
        LOGGER.error("%s is not a directory", directory)
        return []

    files = []
    for p in root_path.rglob(f"*{ext}"):
        if exclude_name and p.name == exclude_name:
            continue
        files.append(str(p.absolute()))

    return sorted(files)
