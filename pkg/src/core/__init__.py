"""コアモジュール.

series_core → transforms → divisibility → dtype_stable / samplers →
random_sums / max_random の順に依存する。
"""
from .run_history import RunHistory, RunRecord

__all__ = [
    "RunHistory",
    "RunRecord",
]
