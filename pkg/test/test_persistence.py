"""
Tests for atomic table output.
"""

import os

import pytest

import persistence
from persistence import write_text_atomic


class TestWriteTextAtomic:
    """Atomic write of generated tables."""

    def test_write_creates_file_and_directories(self, tmp_path):
        target = tmp_path / "out" / "zeros.csv"
        path = write_text_atomic(target, "n,j,x\n1,0,0.0\n")
        assert path == target
        assert target.read_text(encoding="utf-8") == "n,j,x\n1,0,0.0\n"

    def test_overwrite_replaces_content(self, tmp_path):
        target = tmp_path / "table.json"
        write_text_atomic(target, "[]\n")
        write_text_atomic(str(target), "[1]\n")
        assert target.read_text(encoding="utf-8") == "[1]\n"

    def test_no_temporary_files_left(self, tmp_path):
        target = tmp_path / "table.csv"
        for k in range(3):
            write_text_atomic(target, f"row {k}\n")
        assert sorted(p.name for p in tmp_path.iterdir()) == ["table.csv"]

    def test_newlines_written_verbatim(self, tmp_path):
        target = tmp_path / "table.csv"
        write_text_atomic(target, "a\nb\n")
        assert target.read_bytes() == b"a\nb\n"

    def test_failed_rename_keeps_previous_content(self, tmp_path, monkeypatch):
        target = tmp_path / "table.csv"
        write_text_atomic(target, "old\n")

        def failing_replace(src, dst):
            raise OSError("disk full")

        monkeypatch.setattr(persistence.os, "replace", failing_replace)
        with pytest.raises(OSError):
            write_text_atomic(target, "new\n")

        assert target.read_text(encoding="utf-8") == "old\n"
        assert not any(p.name.startswith(".tmp_table_") for p in tmp_path.iterdir())
        assert os.path.exists(target)
