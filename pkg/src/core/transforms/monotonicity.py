"""完全単調性・ベルンシュタイン性の差分プローブ.

n 階の差分商は f^{(n)}(ξ)/n! に等しいので、完全単調な f では符号が (-1)^n。
丸め誤差の上限を差分表と同じ漸化式で伝播させ、それ以下の値は符号不明として扱う。
"""
import logging
from typing import Callable

import numpy as np
from numpy.typing import ArrayLike

from src.models import CandidateTable, PGFSpec, ProbeResult, ProbeVerdict

logger = logging.getLogger(__name__)

DEFAULT_DEPTH = 6
ROUNDING_EPS = 1e-14
DECISIVE_FACTOR = 1e3


def _alternation_probe(
    grid: np.ndarray,
    values: np.ndarray,
    first_order: int,
    last_order: int,
    sign: float,
    base_order: int,
) -> ProbeResult:
    """符号 sign·(-1)^n を first_order..last_order 階で確認.

    base_order 階の関数（完全単調性を問う関数）の次の階で差分が全て消えた場合、
    その関数が定数なら PASS、それ以外で消えたら FAIL。
    """
    if not np.all(np.isfinite(values)):
        return ProbeResult(ProbeVerdict.INCONCLUSIVE, 0, detail="non-finite values")
    if grid.size < 2:
        return ProbeResult(ProbeVerdict.INCONCLUSIVE, 0, detail="grid too short")

    last_order = min(last_order, grid.size - 1)
    diffs = values.astype(float)
    noise = np.full(values.size, ROUNDING_EPS * max(1.0, float(np.max(np.abs(values)))))
    depth = 0
    decisive_prev = False

    for n in range(0, last_order + 1):
        if n > 0:
            span = grid[n:] - grid[:-n]
            diffs = (diffs[1:] - diffs[:-1]) / span
            noise = (noise[1:] + noise[:-1]) / span

        if n < first_order:
            decisive_prev = bool(np.all(np.abs(diffs) > DECISIVE_FACTOR * noise))
            continue

        required = sign * (-1.0) ** n
        signed = required * diffs
        if np.any(signed < -noise):
            index = int(np.argmax(signed < -noise))
            return ProbeResult(
                ProbeVerdict.FAIL,
                depth=n,
                failed_order=n,
                detail=f"order {n} difference {diffs[index]:.3e} has the wrong sign",
            )

        if np.all(np.abs(diffs) <= noise):
            if decisive_prev and n - 1 == base_order:
                return ProbeResult(ProbeVerdict.PASS, depth=n, detail="constant function")
            if decisive_prev:
                return ProbeResult(
                    ProbeVerdict.FAIL,
                    depth=n,
                    failed_order=n,
                    detail=f"order {n} differences vanish on a non-constant function",
                )
            return ProbeResult(
                ProbeVerdict.INCONCLUSIVE,
                depth=n - 1,
                detail=f"order {n} differences below rounding noise",
            )

        decisive_prev = bool(np.all(np.abs(diffs) > DECISIVE_FACTOR * noise))
        depth = n

    return ProbeResult(ProbeVerdict.PASS, depth=depth)


def _prepare_grid(grid: ArrayLike) -> np.ndarray:
    arr = np.asarray(grid, dtype=float)
    if arr.ndim != 1 or np.any(arr <= 0) or np.any(np.diff(arr) <= 0):
        raise ValueError("Grid points must be positive and strictly increasing")
    return arr


def complete_monotonicity_probe(
    f: Callable[[np.ndarray], np.ndarray],
    grid: ArrayLike,
    depth: int = DEFAULT_DEPTH,
) -> ProbeResult:
    """f の 0..depth 階の交代差分プローブ."""
    x = _prepare_grid(grid)
    values = np.asarray(f(x), dtype=float)
    result = _alternation_probe(x, values, 0, depth, sign=1.0, base_order=0)
    logger.debug("Complete monotonicity probe: %s (depth %d)", result.verdict.value, result.depth)
    return result


def bernstein_probe(
    h: Callable[[np.ndarray], np.ndarray],
    grid: ArrayLike,
    depth: int = DEFAULT_DEPTH,
) -> ProbeResult:
    """g = -log h がベルンシュタイン関数（g ≥ 0 かつ g' が完全単調）かを調べる.

    g の 1..depth+1 階差分の符号が (-1)^{n-1} であることを確認する。
    """
    x = _prepare_grid(grid)
    with np.errstate(divide="ignore", invalid="ignore"):
        g = -np.log(np.asarray(h(x), dtype=float))
    if np.all(np.isfinite(g)) and np.any(g < -ROUNDING_EPS * max(1.0, float(np.max(np.abs(g))))):
        return ProbeResult(ProbeVerdict.FAIL, depth=0, failed_order=0, detail="-log f is negative")
    result = _alternation_probe(x, g, 1, depth + 1, sign=-1.0, base_order=1)
    logger.debug("Bernstein probe: %s (depth %d)", result.verdict.value, result.depth)
    return result


def lt_candidate_from_pgf(
    q: PGFSpec,
    grid: ArrayLike,
    depth: int = DEFAULT_DEPTH,
) -> CandidateTable:
    """候補ラプラス変換 s ↦ Q(1 - s) の評価表と完全単調性プローブ.

    Args:
        q: PGF
        grid: 正の昇順の評価点
        depth: プローブの最大差分次数

    Returns:
        CandidateTable（数値的な失敗は INCONCLUSIVE）
    """
    x = _prepare_grid(grid)
    with np.errstate(all="ignore"):
        values = np.real(np.asarray(q.evaluate(1.0 - x), dtype=complex)).astype(float)
    probe = _alternation_probe(x, values, 0, depth, sign=1.0, base_order=0)
    if probe.verdict is ProbeVerdict.INCONCLUSIVE:
        logger.warning("Complete monotonicity probe inconclusive for %s: %s", q.label, probe.detail)
    return CandidateTable(grid=x, values=values, probe=probe)
