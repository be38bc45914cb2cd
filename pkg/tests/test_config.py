"""設定と許容誤差テーブルのテスト."""
import json
import logging

import pytest
import yaml

from src.config import (
    AppSettings,
    ConfigError,
    SeriesConfig,
    SimulationConfig,
    ToleranceConfig,
    get_app_dir,
    get_settings,
    reload_settings,
)
from src.utils import setup_logging


class TestDefaults:
    def test_tolerance_table(self, tolerance):
        assert tolerance.ks_strict == 0.02
        assert tolerance.ks_loose == 0.03
        assert tolerance.monotone_slack == 0.005
        assert tolerance.mc_sigma == 3.0

    def test_simulation_schedule(self):
        sim = SimulationConfig()
        assert sim.theta_schedule == [0.5, 0.1, 0.02, 0.004]
        assert sim.lemma3_schedule[-1] == 0.001
        assert sim.seed == 42

    def test_app_dir_follows_environment(self, isolated_home):
        assert get_app_dir() == isolated_home
        assert isolated_home.is_dir()

    def test_singleton(self):
        assert get_settings() is get_settings()
        assert reload_settings() is get_settings()


class TestValidation:
    def test_series(self):
        with pytest.raises(ConfigError):
            SeriesConfig(terms=0)
        with pytest.raises(ConfigError):
            SeriesConfig(contour_radius=1.0)

    def test_simulation(self):
        with pytest.raises(ConfigError):
            SimulationConfig(samples=0)
        with pytest.raises(ConfigError):
            SimulationConfig(workers=0)


class TestConfigFile:
    def test_save_and_load(self, tmp_path):
        path = tmp_path / "config.yaml"
        settings = AppSettings()
        settings.simulation.samples = 1234
        settings.tolerance.ks_strict = 0.01
        settings.save(path)

        loaded = AppSettings.load(path)
        assert loaded.simulation.samples == 1234
        assert loaded.tolerance.ks_strict == 0.01
        assert loaded.series.terms == 64

    def test_missing_file_gives_defaults(self, tmp_path):
        assert AppSettings.load(tmp_path / "absent.yaml").simulation.samples == 100_000

    def test_unknown_section(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text(yaml.dump({"gui": {"theme": "dark"}}), encoding="utf-8")
        with pytest.raises(ConfigError, match="gui"):
            AppSettings.load(path)

    def test_unknown_key_in_section(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text(yaml.dump({"simulation": {"sample": 5}}), encoding="utf-8")
        with pytest.raises(ConfigError, match="sample"):
            AppSettings.load(path)

    @pytest.mark.parametrize("content", ["series: 5\n", "tolerance: [0.1]\n", "- series\n"])
    def test_section_must_be_mapping(self, tmp_path, content):
        path = tmp_path / "config.yaml"
        path.write_text(content, encoding="utf-8")
        with pytest.raises(ConfigError):
            AppSettings.load(path)

    def test_empty_section_gives_defaults(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("series:\nsimulation:\n  samples: 10\n", encoding="utf-8")
        loaded = AppSettings.load(path)
        assert loaded.series.terms == 64
        assert loaded.simulation.samples == 10

    def test_invalid_yaml(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("series: [unclosed", encoding="utf-8")
        with pytest.raises(ConfigError):
            AppSettings.load(path)


class TestToleranceTable:
    def test_environment_override(self, tmp_path, monkeypatch):
        table = tmp_path / "tolerance.json"
        table.write_text(json.dumps({"ks_loose": 0.05}), encoding="utf-8")
        monkeypatch.setenv("IDLAB_TOLERANCE_TABLE", str(table))

        settings = AppSettings.load(tmp_path / "absent.yaml")
        assert settings.tolerance.ks_loose == 0.05
        assert settings.tolerance.ks_strict == 0.02

    def test_unknown_key(self, tmp_path):
        table = tmp_path / "tolerance.json"
        table.write_text(json.dumps({"ks_tight": 0.01}), encoding="utf-8")
        with pytest.raises(ConfigError, match="ks_tight"):
            ToleranceConfig.from_json_file(table)

    def test_not_an_object(self, tmp_path):
        table = tmp_path / "tolerance.json"
        table.write_text("[0.02]", encoding="utf-8")
        with pytest.raises(ConfigError):
            ToleranceConfig.from_json_file(table)


class TestLogging:
    def test_level_from_environment(self, monkeypatch):
        monkeypatch.setenv("IDLAB_LOG_LEVEL", "debug")
        logger = setup_logging(AppSettings().logging)
        assert logger.level == logging.DEBUG
        assert len(logger.handlers) == 1

    def test_file_handler(self, tmp_path):
        config = AppSettings().logging
        config.save_to_file = True
        config.log_dir = tmp_path / "logs"
        logger = setup_logging(config)
        assert len(logger.handlers) == 2
        setup_logging()
        assert (tmp_path / "logs" / "idlab.log").exists()
