"""設定モジュール."""
from .settings import (
    AppSettings,
    ConfigError,
    HistoryConfig,
    LoggingConfig,
    SeriesConfig,
    SimulationConfig,
    ToleranceConfig,
    get_app_dir,
    get_config_path,
    get_settings,
    is_windows,
    reload_settings,
)

__all__ = [
    "AppSettings",
    "ConfigError",
    "SeriesConfig",
    "ToleranceConfig",
    "SimulationConfig",
    "HistoryConfig",
    "LoggingConfig",
    "get_settings",
    "reload_settings",
    "get_app_dir",
    "get_config_path",
    "is_windows",
]
