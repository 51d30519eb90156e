"""
Atomic file output for generated tables.

Text is written to a temporary file in the target's directory and then
renamed over the target, so a failed run never leaves a partial CSV/JSON
file behind: the target either keeps its previous content or holds the
complete new table.
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path
from typing import Union


def write_text_atomic(file_path: Union[str, Path], text: str) -> Path:
    """Write ``text`` to ``file_path`` atomically and return the resolved path."""
    file_path = Path(file_path)
    dir_path = file_path.parent
    dir_path.mkdir(parents=True, exist_ok=True)

    # Temp file in the same directory so the rename stays on one filesystem
    fd, temp_path = tempfile.mkstemp(dir=dir_path, prefix=".tmp_table_", suffix=file_path.suffix)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        os.replace(temp_path, file_path)
    except BaseException:
        try:
            os.unlink(temp_path)
        except OSError:
            pass
        raise
    return file_path
