"""離散自己分解可能性（Q(s)/Q(1 - c + cs) が PGF か）の検査."""
import logging
from typing import Optional, Sequence, Union

import numpy as np

from src.config import ToleranceConfig, get_settings
from src.core.divisibility import ZeroAtOrigin
from src.core.series_core import series_divide
from src.core.transforms import pgf_coefficients
from src.models import PGFSpec, ProbSeq, SelfDecomposabilityResult, Series

from .thinning import thin_series

logger = logging.getLogger(__name__)

# 打ち切り列の除算はこれより重い裾で符号が不安定になる
HEAVY_TAIL_WARNING = 1e-10


def _ratio_from_pmf(q: ProbSeq, c: float) -> Series:
    series = q.as_series()
    return series_divide(series, thin_series(series, c))


def _ratio_from_closed_form(q: PGFSpec, c: float, order: int) -> Series:
    assert q.evaluator is not None
    evaluator = q.evaluator
    ratio = PGFSpec.closed_form(
        lambda z: evaluator(z) / evaluator(1.0 - c + c * z),
        label=f"{q.label}/thinned(c={c:g})",
    )
    return pgf_coefficients(ratio, order)


def discrete_selfdecomposable_check(
    q: Union[ProbSeq, PGFSpec],
    c_grid: Optional[Sequence[float]] = None,
    order: Optional[int] = None,
    tolerance: Optional[ToleranceConfig] = None,
) -> SelfDecomposabilityResult:
    """各 c について Q(s)/Q(1 - c + cs) の係数が非負か調べる.

    確率列は合成した列の級数除算、閉形式 PGF は周回積分で比の係数を得る。

    Args:
        q: 確率列または PGFSpec
        c_grid: 検査する c の列（省略時は設定の c_grid）
        order: 閉形式から抽出する次数（省略時は設定の terms）
        tolerance: 許容誤差（省略時は設定値）

    Returns:
        SelfDecomposabilityResult

    Raises:
        ZeroAtOrigin: p_0 = 0 の場合
    """
    tol = tolerance or get_settings().tolerance
    grid = tuple(float(c) for c in (c_grid if c_grid is not None else get_settings().simulation.c_grid))
    if not grid or any(not 0.0 < c < 1.0 for c in grid):
        raise ValueError(f"c_grid must be a non-empty list in (0, 1), got {list(grid)}")

    if isinstance(q, PGFSpec) and q.probseq is not None:
        q = q.probseq

    if isinstance(q, ProbSeq):
        p0 = q.p0
        n_terms = q.order
        source = "pmf"
        if q.tail_bound > HEAVY_TAIL_WARNING:
            logger.warning(
                "Self-decomposability on a truncated pmf with tail mass %.3g; "
                "pass a closed-form PGF for heavy tails",
                q.tail_bound,
            )
    else:
        p0 = float(np.real(q.evaluate(0.0)))
        n_terms = order or get_settings().series.terms
        source = "closed-form"

    if p0 <= tol.zero_at_origin:
        raise ZeroAtOrigin(f"Self-decomposability needs p_0 > 0, got {p0!r}")

    worst_c, worst_index, worst_value = grid[0], 0, np.inf
    for c in grid:
        if isinstance(q, ProbSeq):
            ratio = _ratio_from_pmf(q, c)
        else:
            ratio = _ratio_from_closed_form(q, c, n_terms)
        index = int(np.argmin(ratio.coeffs))
        value = float(ratio.coeffs[index])
        logger.debug("c=%g: min coefficient %.3e at %d", c, value, index)
        if value < worst_value:
            worst_c, worst_index, worst_value = c, index, value

    return SelfDecomposabilityResult(
        passed=worst_value >= -tol.sd_nonneg,
        c_grid=grid,
        worst_c=worst_c,
        worst_index=worst_index,
        worst_value=float(worst_value),
        order=n_terms,
        source=source,
    )
