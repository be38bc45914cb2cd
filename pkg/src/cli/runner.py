"""RunConfig の実行."""
import logging
import time
from pathlib import Path
from typing import Optional

from src.config import AppSettings, get_settings
from src.core.run_history import RunHistory
from src.models import Report, RunConfig

from .params import PARAM_MODELS
from .reporting import build_report, exit_code_for, write_plot_csv, write_report
from .verbs import HANDLERS, RunContext

logger = logging.getLogger(__name__)


def resolve_config(config: RunConfig, settings: Optional[AppSettings] = None) -> RunConfig:
    """省略された seed / samples / terms を設定値で埋める."""
    settings = settings or get_settings()
    return config.model_copy(
        update={
            "seed": settings.simulation.seed if config.seed is None else config.seed,
            "samples": config.samples or settings.simulation.samples,
            "terms": config.terms or settings.series.terms,
        }
    )


def run(config: RunConfig, settings: Optional[AppSettings] = None) -> tuple[int, Report, Path]:
    """動詞を実行し、レポートを書き出す.

    パラメータは計算の前に検証する。判定によらずレポートを 1 つ書き出す。

    Args:
        config: 実行設定
        settings: アプリ設定（省略時はシングルトン）

    Returns:
        (終了コード, Report, レポートのパス)

    Raises:
        pydantic.ValidationError: パラメータが不正な場合
    """
    settings = settings or get_settings()
    config = resolve_config(config, settings)
    params = PARAM_MODELS[config.verb].model_validate(config.params)
    assert config.seed is not None and config.samples is not None and config.terms is not None
    ctx = RunContext(seed=config.seed, samples=config.samples, terms=config.terms)

    logger.info("Running %s (seed=%d, samples=%d, terms=%d)", config.verb, ctx.seed, ctx.samples, ctx.terms)
    started = time.perf_counter()
    result = HANDLERS[config.verb](params, ctx)
    wall_time = time.perf_counter() - started

    report = build_report(config, result, wall_time)
    out_dir = Path(config.out_dir)
    path = write_report(report, out_dir)
    write_plot_csv(result, out_dir, config.verb)
    code = exit_code_for(report.verdict)
    logger.info("%s finished: %s (%.2fs)", config.verb, report.verdict, wall_time)

    if settings.history.enabled:
        RunHistory(max_records=settings.history.max_records).add(
            verb=config.verb,
            verdict=report.verdict,
            exit_code=code,
            report_path=path,
            seed=config.seed,
            wall_time=wall_time,
        )
    return code, report, path
