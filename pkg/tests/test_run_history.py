"""実行履歴のテスト."""
import json
import logging

import pytest

from src.core import RunHistory


@pytest.fixture
def history(tmp_path):
    return RunHistory(tmp_path / "history.json", max_records=3)


def test_add_and_reload(history, tmp_path):
    record = history.add("idcheck", "ID", 0, tmp_path / "report.json", seed=42, wall_time=0.5)
    assert record.id.startswith("idcheck_")

    again = RunHistory(tmp_path / "history.json")
    assert again.get_by_id(record.id) == record
    assert json.loads((tmp_path / "history.json").read_text(encoding="utf-8"))["runs"][0]["wall_time"] == 0.5


def test_newest_first_and_capped(history, tmp_path):
    for verb in ("idcheck", "thin", "pphi", "lemma3"):
        history.add(verb, "PASS", 0, tmp_path / f"{verb}.json")
    assert [r.verb for r in history.get_all()] == ["lemma3", "pphi", "thin"]
    assert [r.verb for r in history.get_recent(2)] == ["lemma3", "pphi"]


def test_delete_and_clear(history, tmp_path):
    record = history.add("thin", "PASS", 0, tmp_path / "thin.json")
    assert history.delete(record.id)
    assert not history.delete(record.id)
    history.add("thin", "PASS", 0, tmp_path / "thin.json")
    history.clear()
    assert history.get_all() == []


def test_unreadable_file_is_ignored(tmp_path, caplog, monkeypatch):
    # setup_logging は伝播を止めるので caplog 用に戻す
    monkeypatch.setattr(logging.getLogger("src"), "propagate", True)
    path = tmp_path / "history.json"
    path.write_text("{not json", encoding="utf-8")
    assert RunHistory(path).get_all() == []
    assert "unreadable run history" in caplog.text


def test_default_location(isolated_home):
    assert RunHistory().history_file == isolated_home / "history.json"


def test_max_records_must_be_positive(tmp_path):
    with pytest.raises(ValueError):
        RunHistory(tmp_path / "history.json", max_records=0)
