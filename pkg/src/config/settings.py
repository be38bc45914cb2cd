"""アプリケーション設定."""
import json
import os
import platform
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Optional

import yaml

ENV_HOME = "IDLAB_HOME"
ENV_TOLERANCE_TABLE = "IDLAB_TOLERANCE_TABLE"
ENV_LOG_LEVEL = "IDLAB_LOG_LEVEL"


class ConfigError(Exception):
    """設定エラー."""

    code = "IDLAB-C001"


def get_app_dir() -> Path:
    """アプリケーションディレクトリを取得."""
    override = os.environ.get(ENV_HOME)
    app_dir = Path(override) if override else Path.home() / ".idlab"
    app_dir.mkdir(parents=True, exist_ok=True)
    return app_dir


def get_config_path() -> Path:
    """設定ファイルパスを取得."""
    return get_app_dir() / "config.yaml"


def is_windows() -> bool:
    """Windowsかどうか判定."""
    return platform.system() == "Windows"


@dataclass
class SeriesConfig:
    """冪級数設定."""

    terms: int = 64  # 打ち切り次数
    contour_radius: float = 0.9  # 係数抽出の周回半径
    contour_points: int = 4096  # 周回上の評価点数（最小値）

    def __post_init__(self) -> None:
        """値を検証."""
        if self.terms < 1:
            raise ConfigError(f"series.terms must be >= 1, got {self.terms}")
        if not 0.0 < self.contour_radius < 1.0:
            raise ConfigError(
                f"series.contour_radius must be in (0, 1), got {self.contour_radius}"
            )


@dataclass
class ToleranceConfig:
    """許容誤差テーブル.

    判定に使う閾値はすべてここに集約する。
    """

    nonneg_coefficient: float = 1e-12
    zero_at_origin: float = 1e-14
    finite_support_tail: float = 1e-14
    support_threshold: float = 1e-12
    recombination: float = 1e-9
    sd_nonneg: float = 1e-10
    dtype_equal: float = 1e-8
    stability_identity: float = 1e-12
    attraction_final: float = 1e-2
    pgf_normalization: float = 1e-10
    ks_strict: float = 0.02
    ks_loose: float = 0.03
    negative_control_ks: float = 0.1
    monotone_slack: float = 0.005
    mc_sigma: float = 3.0
    mc_sigma_pmf: float = 4.0
    atom_window: float = 0.25
    cm_probe_depth: int = 6

    @classmethod
    def from_json_file(cls, path: Path, base: Optional["ToleranceConfig"] = None) -> "ToleranceConfig":
        """JSONファイルの値で上書きしたテーブルを作成.

        Args:
            path: JSONファイルパス（オブジェクト形式）
            base: 上書き元（省略時はデフォルト）

        Returns:
            ToleranceConfig

        Raises:
            ConfigError: ファイルが読めない、または未知のキーを含む場合
        """
        try:
            with open(path, encoding="utf-8") as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"Failed to read tolerance table {path}: {e}") from e

        if not isinstance(data, dict):
            raise ConfigError(f"Tolerance table {path} must be a JSON object")

        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"Unknown tolerance keys in {path}: {', '.join(unknown)}")

        merged = asdict(base or cls())
        merged.update(data)
        return cls(**merged)


@dataclass
class SimulationConfig:
    """シミュレーション設定."""

    samples: int = 100_000
    seed: int = 42
    theta_schedule: list[float] = field(default_factory=lambda: [0.5, 0.1, 0.02, 0.004])
    lemma3_schedule: list[float] = field(
        default_factory=lambda: [0.5, 0.1, 0.02, 0.004, 0.001]
    )
    c_grid: list[float] = field(
        default_factory=lambda: [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]
    )
    workers: int = 1  # θごとの並列数（結果は並列数に依存しない）

    def __post_init__(self) -> None:
        """値を検証."""
        if self.samples < 1:
            raise ConfigError(f"simulation.samples must be >= 1, got {self.samples}")
        if self.workers < 1:
            raise ConfigError(f"simulation.workers must be >= 1, got {self.workers}")


@dataclass
class HistoryConfig:
    """実行履歴設定."""

    enabled: bool = True
    max_records: int = 50


@dataclass
class LoggingConfig:
    """ログ設定."""

    level: str = "INFO"  # DEBUG, INFO, WARNING, ERROR
    save_to_file: bool = False
    log_dir: Path = field(default_factory=lambda: get_app_dir() / "logs")

    def __post_init__(self) -> None:
        """環境変数を反映."""
        env_level = os.environ.get(ENV_LOG_LEVEL)
        if env_level:
            self.level = env_level
        self.level = self.level.upper()


@dataclass
class AppSettings:
    """アプリケーション設定."""

    series: SeriesConfig = field(default_factory=SeriesConfig)
    tolerance: ToleranceConfig = field(default_factory=ToleranceConfig)
    simulation: SimulationConfig = field(default_factory=SimulationConfig)
    history: HistoryConfig = field(default_factory=HistoryConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    @classmethod
    def load(cls, path: Optional[Path] = None) -> "AppSettings":
        """設定をファイルから読み込み.

        ファイルが無い場合はデフォルト設定を返す（書き込みはしない）。
        最後に環境変数 IDLAB_TOLERANCE_TABLE の上書きを適用する。
        """
        if path is None:
            path = get_config_path()

        if path.exists():
            try:
                with open(path, encoding="utf-8") as f:
                    data = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ConfigError(f"Invalid config file {path}: {e}") from e
            settings = cls._from_dict(data)
        else:
            settings = cls()

        table_path = os.environ.get(ENV_TOLERANCE_TABLE)
        if table_path:
            settings.tolerance = ToleranceConfig.from_json_file(
                Path(table_path), base=settings.tolerance
            )

        return settings

    @classmethod
    def _from_dict(cls, data: dict[str, Any]) -> "AppSettings":
        """辞書から設定を作成."""
        sections: dict[str, type] = {
            "series": SeriesConfig,
            "tolerance": ToleranceConfig,
            "simulation": SimulationConfig,
            "history": HistoryConfig,
            "logging": LoggingConfig,
        }

        if not isinstance(data, dict):
            raise ConfigError("Config file must contain a mapping of sections")
        unknown = sorted(set(data) - set(sections))
        if unknown:
            raise ConfigError(f"Unknown config sections: {', '.join(unknown)}")

        kwargs: dict[str, Any] = {}
        for name, section_cls in sections.items():
            section_data = data.get(name)
            if section_data is None:
                section_data = {}
            if not isinstance(section_data, dict):
                raise ConfigError(f"Section '{name}' must be a mapping")
            known = {f.name for f in fields(section_cls)}
            unknown_keys = sorted(set(section_data) - known)
            if unknown_keys:
                raise ConfigError(
                    f"Unknown keys in section '{name}': {', '.join(map(str, unknown_keys))}"
                )
            values = dict(section_data)
            if name == "logging" and "log_dir" in values:
                values["log_dir"] = Path(values["log_dir"]).expanduser()
            try:
                kwargs[name] = section_cls(**values)
            except TypeError as e:
                raise ConfigError(f"Invalid values in section '{name}': {e}") from e

        return cls(**kwargs)

    def save(self, path: Optional[Path] = None) -> None:
        """設定をファイルに保存."""
        if path is None:
            path = get_config_path()

        data = self._to_dict()

        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            yaml.dump(data, f, default_flow_style=False, allow_unicode=True)

        # Unixではパーミッションを設定
        if not is_windows():
            os.chmod(path, 0o600)

    def _to_dict(self) -> dict[str, Any]:
        """設定を辞書に変換."""
        data = asdict(self)
        data["logging"]["log_dir"] = str(self.logging.log_dir)
        return data


# グローバル設定インスタンス
_settings: Optional[AppSettings] = None


def get_settings() -> AppSettings:
    """設定を取得（シングルトン）."""
    global _settings
    if _settings is None:
        _settings = AppSettings.load()
    return _settings


def reload_settings() -> AppSettings:
    """設定を再読み込み."""
    global _settings
    _settings = AppSettings.load()
    return _settings
