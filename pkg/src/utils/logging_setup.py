"""ログ設定."""
import logging
from typing import Optional

from src.config import LoggingConfig

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
LOG_FILE_NAME = "idlab.log"


def setup_logging(config: Optional[LoggingConfig] = None) -> logging.Logger:
    """パッケージのロガーを設定.

    Args:
        config: ログ設定（省略時はデフォルト）

    Returns:
        パッケージルートのロガー
    """
    config = config or LoggingConfig()
    logger = logging.getLogger("src")

    level = logging.getLevelName(config.level)
    if not isinstance(level, int):
        level = logging.INFO
    logger.setLevel(level)

    # 再設定時はハンドラを入れ替える
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter(LOG_FORMAT)

    stream_handler = logging.StreamHandler()
    stream_handler.setFormatter(formatter)
    logger.addHandler(stream_handler)

    if config.save_to_file:
        config.log_dir.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(config.log_dir / LOG_FILE_NAME, encoding="utf-8")
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    logger.propagate = False
    return logger
