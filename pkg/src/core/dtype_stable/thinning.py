"""二項間引きと D 型."""
import logging
from typing import Optional

import numpy as np

from src.config import ToleranceConfig, get_settings
from src.core.series_core import series_compose
from src.models import DtypeComparison, ProbSeq, Series, ThinningParam

logger = logging.getLogger(__name__)

U_GRID = np.round(np.arange(1, 20) * 0.05, 10)


def bernoulli_series(c: float, order: int) -> Series:
    """ベルヌーイ PGF 1 - c + cs."""
    coeffs = np.zeros(order + 1)
    coeffs[0] = 1.0 - c
    if order >= 1:
        coeffs[1] = c
    return Series(coeffs)


def thin_series(q: Series, c: float) -> Series:
    """Q(1 - c + cs) の係数."""
    if c == 1.0:
        return q
    return series_compose(q, bernoulli_series(c, q.order))


def thin(q: ProbSeq, c: ThinningParam) -> ProbSeq:
    """二項間引き c∘X の確率列.

    Args:
        q: X の確率列
        c: 間引きパラメータ

    Returns:
        PGF Q(1 - c + cs) の確率列
    """
    if c.c == 1.0:
        return q
    return ProbSeq.from_coefficients(thin_series(q.as_series(), c.c))


def same_dtype(
    q1: ProbSeq,
    q2: ProbSeq,
    c: ThinningParam,
    tolerance: Optional[ToleranceConfig] = None,
) -> DtypeComparison:
    """Q_1(u) = Q_2(1 - c + cu) を u ∈ {0.05, ..., 0.95} で確かめる."""
    tol = tolerance or get_settings().tolerance
    lhs = q1.evaluate(U_GRID)
    rhs = q2.evaluate(1.0 - c.c + c.c * U_GRID)
    deviation = float(np.max(np.abs(lhs - rhs)))
    threshold = tol.dtype_equal + q1.tail_bound + q2.tail_bound
    logger.debug("D-type deviation %.3e (threshold %.3e)", deviation, threshold)
    return DtypeComparison(equal=deviation < threshold, max_deviation=deviation, tolerance=threshold)
