"""{0,1,2,...} 上の分布の無限分解可能性の判定.

判定の優先順位: 原点の質量 0 → 有限台 → 複合分布の係数の符号。
"""
import logging
from typing import Optional

import numpy as np

from src.config import ToleranceConfig, get_settings
from src.core.series_core import (
    series_compose,
    series_exp,
    series_log,
    series_pow,
)
from src.models import (
    Decomposition,
    InvalidPmf,
    ProbSeq,
    RootResult,
    Series,
    SupportCheck,
    SupportProfile,
    Verdict,
)

logger = logging.getLogger(__name__)


class DivisibilityError(Exception):
    """無限分解可能性判定エラー."""

    code = "IDLAB-D001"


class ZeroAtOrigin(DivisibilityError):
    """P{X = 0} = 0 の分布に対する操作."""

    code = "IDLAB-D002"


class NotApplicable(DivisibilityError):
    """ID でない分布への適用."""

    code = "IDLAB-D003"


def _tolerance(tolerance: Optional[ToleranceConfig]) -> ToleranceConfig:
    return tolerance or get_settings().tolerance


def has_finite_support(q: ProbSeq, tail_threshold: float) -> bool:
    """打ち切り窓の範囲で有限台と言えるか.

    裾の質量が閾値未満で、かつ最後の係数が 0 か裾が厳密に 0 のとき。
    """
    if q.tail_bound >= tail_threshold:
        return False
    return q.last_nonzero() < q.order or q.tail_bound == 0.0


def compound_poisson_decompose(
    q: ProbSeq,
    tolerance: Optional[ToleranceConfig] = None,
) -> Decomposition:
    """複合ポアソン分解 Q(s) = exp{-λ(1 - A(s))} を試みる.

    Args:
        q: 確率列
        tolerance: 許容誤差（省略時は設定値）

    Returns:
        Decomposition

    Raises:
        InvalidPmf: q が確率列でない場合
    """
    if not isinstance(q, ProbSeq):
        raise InvalidPmf(f"Expected a ProbSeq, got {type(q).__name__}")
    tol = _tolerance(tolerance)

    if q.p0 <= tol.zero_at_origin:
        logger.debug("p_0 = %.3g: no integer-valued components", q.p0)
        return Decomposition(Verdict.NOT_ID_ZERO_AT_ORIGIN)

    finite = (
        has_finite_support(q, tol.finite_support_tail)
        and np.count_nonzero(q.p) >= 2
    )

    with np.errstate(over="ignore", invalid="ignore"):
        log_q = series_log(q.as_series()).coeffs
    if not np.all(np.isfinite(log_q)):
        if finite:
            # 有限台は打ち切り誤差に依らず ID でない
            logger.debug("log Q overflowed; finite support decides the verdict")
            return Decomposition(Verdict.NOT_ID_FINITE_SUPPORT)
        return Decomposition(Verdict.INCONCLUSIVE)

    rate = float(-log_q[0])

    if rate <= 0.0:
        # 0 に退化した分布（λ = 0 の自明な複合ポアソン）
        return Decomposition(Verdict.ID, rate=0.0, margin=0.0)

    a = log_q[1:] / rate
    margin = float(np.min(a)) if a.size else 0.0
    negative = np.flatnonzero(a < -tol.nonneg_coefficient)
    witness_index: Optional[int] = None
    witness_value: Optional[float] = None
    if negative.size:
        witness_index = int(negative[0]) + 1
        witness_value = float(log_q[witness_index])

    if finite:
        return Decomposition(
            Verdict.NOT_ID_FINITE_SUPPORT,
            witness_index=witness_index,
            witness_value=witness_value,
            margin=margin,
        )
    if witness_index is not None:
        return Decomposition(
            Verdict.NOT_ID_NEGATIVE_COEFFICIENT,
            witness_index=witness_index,
            witness_value=witness_value,
            margin=margin,
        )

    compounding = ProbSeq.from_coefficients(np.concatenate(([0.0], a)))
    return Decomposition(Verdict.ID, rate=rate, compounding=compounding, margin=margin)


def rebuild_from_decomposition(d: Decomposition, order: int) -> Series:
    """exp{-λ(1 - A(s))} の係数を再構成."""
    if not d.is_id or d.rate is None:
        raise NotApplicable(f"Cannot rebuild a law from verdict {d.verdict.value}")
    if d.compounding is None:
        return Series.constant(1.0, order)
    a = d.compounding.padded(order).as_series()
    return series_exp(a.scale(d.rate) - Series.constant(d.rate, order))


def recombination_error(q: ProbSeq, d: Decomposition) -> float:
    """再構成した係数と入力の最大誤差."""
    return rebuild_from_decomposition(d, q.order).max_deviation(q.as_series())


def poisson_as_compound_bernoulli(lam: float, b: float, order: int) -> float:
    """exp{-λ(1-s)} = exp{-a[1 - (1-b+bs)]}（ab = λ）の係数の最大誤差."""
    if not 0.0 < b < 1.0:
        raise ValueError(f"b must be in (0, 1), got {b}")
    outer = ProbSeq.poisson(lam / b, order).as_series()
    bernoulli = Series(np.array([1.0 - b, b]))
    composed = series_compose(outer, bernoulli.truncate(order))
    return composed.max_deviation(ProbSeq.poisson(lam, order).as_series())


def nth_root_component(
    q: ProbSeq,
    n: int,
    tolerance: Optional[ToleranceConfig] = None,
) -> RootResult:
    """Q(s)^{1/n} が整数値の成分の PGF になるか調べる.

    Raises:
        ZeroAtOrigin: p_0 = 0 の場合
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    tol = _tolerance(tolerance)
    if q.p0 <= tol.zero_at_origin:
        raise ZeroAtOrigin(f"No integer-valued {n}-th root component when p_0 = {q.p0!r}")

    root = series_pow(q.as_series(), 1.0 / n).coeffs
    negative = np.flatnonzero(root < -tol.nonneg_coefficient)
    if negative.size:
        index = int(negative[0])
        return RootResult(n=n, witness_index=index, witness_value=float(root[index]))
    return RootResult(n=n, component=ProbSeq.from_coefficients(root))


def support_profile(q: ProbSeq, threshold: float) -> SupportProfile:
    """閾値を超える添字の集合と、その間のギャップ（連続する欠落の組）."""
    if not 0.0 < threshold < 1.0:
        raise ValueError(f"threshold must be in (0, 1), got {threshold}")

    support = np.flatnonzero(q.p > threshold)
    gaps: list[tuple[int, int]] = []
    for left, right in zip(support[:-1], support[1:]):
        if right - left > 1:
            gaps.append((int(left) + 1, int(right - left - 1)))

    return SupportProfile(
        support_indices=tuple(int(i) for i in support),
        gaps=tuple(gaps),
        finite=has_finite_support(q, threshold),
    )


def theorem1a_support_check(
    q: ProbSeq,
    n: int,
    threshold: Optional[float] = None,
    tolerance: Optional[ToleranceConfig] = None,
) -> SupportCheck:
    """ID 分布とその n 乗根成分の台が一致するか（打ち切り窓内）.

    窓は両者の最後の台の添字の小さい方まで。

    Raises:
        NotApplicable: q が ID と判定されない場合
    """
    tol = _tolerance(tolerance)
    threshold = tol.support_threshold if threshold is None else threshold

    decomposition = compound_poisson_decompose(q, tol)
    if not decomposition.is_id:
        raise NotApplicable(
            f"Support comparison needs an ID law, got {decomposition.verdict.value}"
        )

    root = nth_root_component(q, n, tol)
    if root.component is None:
        return SupportCheck(n=n, coincide=False, window=-1, input_support=(), component_support=())

    input_support = support_profile(q, threshold).support_indices
    component_support = support_profile(root.component, threshold).support_indices
    window = min(
        input_support[-1] if input_support else -1,
        component_support[-1] if component_support else -1,
    )
    left = tuple(i for i in input_support if i <= window)
    right = tuple(i for i in component_support if i <= window)
    return SupportCheck(
        n=n,
        coincide=left == right,
        window=window,
        input_support=left,
        component_support=right,
    )
