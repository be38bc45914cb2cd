"""レポートの組み立てと書き出し."""
import csv
import json
import logging
from pathlib import Path
from typing import Any, Optional

import numpy as np

from src import __version__
from src.core.samplers import write_samples_csv
from src.models import Provenance, Report, RunConfig

from .verbs import VerbResult

logger = logging.getLogger(__name__)

EXIT_CODES = {
    "PASS": 0,
    "ID": 0,
    "FAIL": 1,
    "NOT_ID": 1,
    "INCONCLUSIVE": 2,
}
EXIT_USAGE = 3


def exit_code_for(verdict: str) -> int:
    return EXIT_CODES[verdict]


def _json_default(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, Path):
        return str(value)
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def build_report(config: RunConfig, result: VerbResult, wall_time: Optional[float] = None) -> Report:
    """実行設定と結果からレポートを作成（wall_time は record_time のときのみ載せる）."""
    payload = json.loads(json.dumps(result.payload, default=_json_default))
    return Report(
        verb=config.verb,
        config=config.model_dump(mode="json"),
        verdict=result.verdict,  # type: ignore[arg-type]
        payload=payload,
        provenance=Provenance(
            tool_version=__version__,
            wall_time=wall_time if config.record_time else None,
        ),
    )


def render_report(report: Report) -> str:
    """キー順を固定した JSON（同じ設定・シードなら同じバイト列）."""
    data = report.model_dump(mode="json")
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_report(report: Report, out_dir: Path) -> Path:
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"{report.verb}.json"
    path.write_text(render_report(report), encoding="utf-8")
    logger.debug("Wrote report %s", path)
    return path


def write_plot_csv(result: VerbResult, out_dir: Path, verb: str) -> Optional[Path]:
    """プロット用 CSV（θ 対 KS、k 対 p_k など）または標本ダンプを書き出す."""
    path = out_dir / f"{verb}.csv"
    if result.sample_dump is not None:
        dist, law, stream = result.sample_dump
        return write_samples_csv(path, dist, law, stream)
    if not result.csv_header:
        return None
    out_dir.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(result.csv_header)
        for row in result.csv_rows:
            writer.writerow([repr(float(v)) if isinstance(v, float) else v for v in row])
    return path
