"""実行履歴管理モジュール.

経過時間はレポートではなくここに記録する。
"""

import json
import logging
import uuid
from dataclasses import asdict, dataclass
from datetime import datetime
from pathlib import Path
from typing import List, Optional

from src.config import get_app_dir

logger = logging.getLogger(__name__)

DEFAULT_MAX_RECORDS = 50


@dataclass
class RunRecord:
    """実行記録."""

    id: str
    verb: str
    verdict: str
    exit_code: int
    report_path: str
    created_at: str
    seed: Optional[int] = None
    wall_time: Optional[float] = None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "RunRecord":
        return cls(**data)


class RunHistory:
    """実行履歴管理クラス."""

    def __init__(self, history_file: Optional[Path] = None, max_records: int = DEFAULT_MAX_RECORDS):
        """初期化.

        Args:
            history_file: 履歴ファイルパス（省略時はアプリディレクトリの history.json）
            max_records: 保持する最大件数
        """
        if max_records < 1:
            raise ValueError(f"max_records must be >= 1, got {max_records}")
        self.history_file = history_file or get_app_dir() / "history.json"
        self.max_records = max_records
        self._records: List[RunRecord] = []
        self._load()

    def _load(self) -> None:
        """履歴を読み込み."""
        if not self.history_file.exists():
            self._records = []
            return

        try:
            with open(self.history_file, "r", encoding="utf-8") as f:
                data = json.load(f)
            self._records = [RunRecord.from_dict(item) for item in data.get("runs", [])]
        except (OSError, ValueError, TypeError) as e:
            logger.warning("Ignoring unreadable run history %s: %s", self.history_file, e)
            self._records = []

    def _save(self) -> None:
        """履歴を保存."""
        self.history_file.parent.mkdir(parents=True, exist_ok=True)
        data = {"runs": [r.to_dict() for r in self._records]}
        with open(self.history_file, "w", encoding="utf-8") as f:
            json.dump(data, f, ensure_ascii=False, indent=2)

    def add(
        self,
        verb: str,
        verdict: str,
        exit_code: int,
        report_path: Path,
        seed: Optional[int] = None,
        wall_time: Optional[float] = None,
    ) -> RunRecord:
        """実行を追加.

        Args:
            verb: CLI の動詞
            verdict: 判定
            exit_code: 終了コード
            report_path: レポートファイルパス
            seed: 乱数シード
            wall_time: 経過時間（秒）

        Returns:
            追加したRunRecord
        """
        now = datetime.now()
        record = RunRecord(
            id=f"{verb}_{now.strftime('%Y%m%d%H%M%S')}_{uuid.uuid4().hex[:6]}",
            verb=verb,
            verdict=verdict,
            exit_code=exit_code,
            report_path=str(report_path),
            created_at=now.isoformat(),
            seed=seed,
            wall_time=wall_time,
        )

        # 新しい順
        self._records.insert(0, record)
        self._records = self._records[: self.max_records]

        self._save()
        return record

    def get_all(self) -> List[RunRecord]:
        """全ての実行を取得（新しい順）."""
        return self._records.copy()

    def get_recent(self, count: int = 5) -> List[RunRecord]:
        return self._records[:count]

    def get_by_id(self, run_id: str) -> Optional[RunRecord]:
        """IDで実行を取得.

        Args:
            run_id: 実行ID

        Returns:
            RunRecord または None
        """
        for record in self._records:
            if record.id == run_id:
                return record
        return None

    def delete(self, run_id: str) -> bool:
        """実行を削除.

        Returns:
            削除成功時True
        """
        original_count = len(self._records)
        self._records = [r for r in self._records if r.id != run_id]

        if len(self._records) < original_count:
            self._save()
            return True
        return False

    def clear(self) -> None:
        """全履歴をクリア."""
        self._records = []
        self._save()
