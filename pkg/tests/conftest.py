"""共通フィクスチャ."""
import pytest

from src.config import settings as settings_module


@pytest.fixture(autouse=True)
def isolated_home(tmp_path, monkeypatch):
    """アプリディレクトリを一時ディレクトリに向け、設定のシングルトンを捨てる."""
    home = tmp_path / "idlab-home"
    monkeypatch.setenv("IDLAB_HOME", str(home))
    monkeypatch.delenv("IDLAB_TOLERANCE_TABLE", raising=False)
    monkeypatch.delenv("IDLAB_LOG_LEVEL", raising=False)
    monkeypatch.setattr(settings_module, "_settings", None)
    yield home
    monkeypatch.setattr(settings_module, "_settings", None)


@pytest.fixture
def tolerance():
    return settings_module.ToleranceConfig()
