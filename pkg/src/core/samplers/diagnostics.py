"""経験分布の距離と出力."""
import csv
import logging
from pathlib import Path
from typing import Callable, Optional, Sequence, Union

import numpy as np
from numpy.typing import ArrayLike
from scipy import stats

from src.models import EmpiricalDist, ProbSeq, SeededStream

from .generators import SamplerError

logger = logging.getLogger(__name__)

CDF = Callable[[np.ndarray], np.ndarray]


class EmptySample(SamplerError):
    """空の標本."""

    code = "IDLAB-R003"


def _require_nonempty(*dists: EmpiricalDist) -> None:
    for dist in dists:
        if dist.count == 0:
            raise EmptySample("KS distance needs a non-empty sample")


def ks_distance(
    a: EmpiricalDist,
    b: Union[EmpiricalDist, CDF],
    atoms: Sequence[float] = (),
    atom_window: float = 0.0,
) -> float:
    """コルモゴロフ距離 sup|F_a - F_b|.

    b が EmpiricalDist なら 2 標本、関数なら 1 標本の厳密な階段関数計算。
    atoms を指定した場合、1 標本の上限は各原子の ±atom_window の外側
    （分布関数の連続点）でとる。

    Raises:
        EmptySample: 標本が空の場合
    """
    if isinstance(b, EmpiricalDist):
        _require_nonempty(a, b)
        return float(stats.ks_2samp(a.values, b.values).statistic)

    _require_nonempty(a)
    if not atoms:
        return float(stats.ks_1samp(a.values, b).statistic)
    return _ks_away_from_atoms(a, b, np.asarray(atoms, dtype=float), atom_window)


def _ks_away_from_atoms(
    a: EmpiricalDist,
    cdf: CDF,
    atoms: np.ndarray,
    window: float,
) -> float:
    x = a.values
    near = np.zeros(x.size, dtype=bool)
    for atom in atoms:
        near |= np.abs(x - atom) <= window
    edges = np.concatenate([atoms - window, atoms + window])
    points = np.unique(np.concatenate([x[~near], edges]))
    if points.size == 0:
        return 0.0

    target = np.asarray(cdf(points), dtype=float)
    upper = np.searchsorted(x, points, side="right") / a.count
    lower = np.searchsorted(x, points, side="left") / a.count
    return float(max(np.max(np.abs(upper - target)), np.max(np.abs(lower - target))))


def discrete_ks_distance(a: EmpiricalDist, q: ProbSeq) -> float:
    """整数値の標本と確率列の分布関数の距離（添字 0..order で評価）."""
    _require_nonempty(a)
    k = np.arange(q.p.size)
    empirical = np.searchsorted(a.values, k, side="right") / a.count
    return float(np.max(np.abs(empirical - np.cumsum(q.p))))


def empirical_lt(dist: EmpiricalDist, s: ArrayLike) -> np.ndarray:
    """経験ラプラス変換 mean(e^{-sX})."""
    s_arr = np.atleast_1d(np.asarray(s, dtype=float))
    return np.array([np.mean(np.exp(-si * dist.values)) for si in s_arr])


def empirical_pgf(samples: ArrayLike, s: ArrayLike) -> np.ndarray:
    """経験 PGF mean(s^N)."""
    values = np.asarray(samples, dtype=float)
    s_arr = np.atleast_1d(np.asarray(s, dtype=float))
    return np.array([np.mean(si**values) for si in s_arr])


def write_samples_csv(
    path: Path,
    dist: EmpiricalDist,
    law: str,
    stream: Optional[SeededStream] = None,
) -> Path:
    """標本を 1 行 1 値で書き出す（先頭行に分布・seed・stream_id）."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(
            [
                f"law={law}",
                f"seed={stream.seed if stream else ''}",
                f"stream_id={stream.stream_id if stream else ''}",
            ]
        )
        for value in dist.values:
            writer.writerow([repr(float(value))])
    logger.debug("Wrote %d samples to %s", dist.count, path)
    return path


def is_nonincreasing(values: Sequence[float], slack: float) -> bool:
    """各値が直前の値 + slack を超えないか."""
    return all(b <= a + slack for a, b in zip(values, values[1:]))
