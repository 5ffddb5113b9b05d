"""Tests for report output and input file parsing."""

import json

import pytest

from src.core.errors import InfraError
from src.domains.series.schemas import SeriesFile
from src.services.file_store import ReportStore


def test_write_json_is_stable(tmp_path):
    store = ReportStore(tmp_path)
    path = store.write_json("sub/report.json", {"b": 1, "a": [1, 2]})
    text = (tmp_path / "sub" / "report.json").read_text()
    assert path == str(tmp_path / "sub" / "report.json")
    assert text.endswith("\n")
    assert list(json.loads(text)) == ["a", "b"]
    store.write_json("again.json", {"a": [1, 2], "b": 1})
    assert (tmp_path / "again.json").read_text() == text


def test_write_csv_keeps_float_precision(tmp_path):
    store = ReportStore(tmp_path)
    store.write_csv("t.csv", ["u", "x"], [[0.1, 1 / 3]])
    lines = (tmp_path / "t.csv").read_text().splitlines()
    assert lines == ["u,x", f"0.1,{1 / 3!r}"]


def test_absolute_target_ignores_base(tmp_path):
    store = ReportStore(tmp_path / "unused")
    target = tmp_path / "direct.json"
    store.write_json(target, {})
    assert target.exists()


def test_read_model(fixtures_dir):
    data = ReportStore.read_model(fixtures_dir / "hyperquadric_n1.json", SeriesFile)
    assert data.n == 1


def test_read_model_errors(tmp_path):
    with pytest.raises(InfraError):
        ReportStore.read_model(tmp_path / "missing.json", SeriesFile)
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": "one"}')
    with pytest.raises(InfraError):
        ReportStore.read_model(bad, SeriesFile)
