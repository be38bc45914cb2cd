"""シード付きストリームの決定的な分割."""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

from src.models import SeededStream

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def map_streams(
    task: Callable[[T, SeededStream], R],
    items: Sequence[T],
    seed: int,
    base_stream_id: int = 0,
    workers: int = 1,
) -> list[R]:
    """items[i] をストリーム (seed, base_stream_id + i) で処理.

    ストリームは添字で固定されるので、結果は workers に依存しない。
    """
    streams = [SeededStream(seed, base_stream_id + i) for i in range(len(items))]
    if workers <= 1 or len(items) <= 1:
        return [task(item, stream) for item, stream in zip(items, streams)]

    logger.debug("Running %d replicates on %d workers", len(items), workers)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(task, items, streams))
