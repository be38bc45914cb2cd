"""ラプラス変換の閉形式と PGF への橋渡し.

Q(s) = φ(1 - s) は任意のラプラス変換 φ に対して PGF になる。
"""
import logging
from typing import Any, Callable, Optional

import numpy as np
from numpy.typing import ArrayLike
from scipy import special

from src.core.series_core import (
    DEFAULT_CONTOUR_POINTS,
    DEFAULT_CONTOUR_RADIUS,
    SeriesError,
    series_exp,
    series_from_function,
    series_reciprocal,
)
from src.models import InvalidPmf, LTFamily, LTSpec, PGFSpec, ProbSeq, Series

logger = logging.getLogger(__name__)


class TransformError(Exception):
    """ラプラス変換エラー."""

    code = "IDLAB-T001"


class NegativeArgument(TransformError):
    """負の引数でのラプラス変換評価."""

    code = "IDLAB-T002"


class CoefficientExtractionFailure(TransformError):
    """係数抽出の失敗（非負性・有限性が保てない）."""

    code = "IDLAB-T003"


def lt_function(phi: LTSpec) -> Callable[[Any], Any]:
    """φ の閉形式（複素数配列にも使える主枝の式）."""
    p = phi.params
    family = phi.family

    if family is LTFamily.DEGENERATE:
        c = p["c"]
        return lambda s: np.exp(-c * s)
    if family is LTFamily.EXPONENTIAL:
        rate = p["rate"]
        return lambda s: rate / (rate + s)
    if family is LTFamily.GAMMA:
        shape, rate = p["shape"], p["rate"]
        return lambda s: (rate / (rate + s)) ** shape
    if family is LTFamily.POSITIVE_STABLE:
        alpha, scale = p["alpha"], p["scale"]
        return lambda s: np.exp(-((scale * s) ** alpha))
    alpha, scale = p["alpha"], p["scale"]
    return lambda s: 1.0 / (1.0 + (scale * s) ** alpha)


def _check_nonnegative(s: ArrayLike) -> np.ndarray:
    arr = np.asarray(s, dtype=float)
    if np.any(arr < 0) or np.any(np.isnan(arr)):
        raise NegativeArgument(f"Laplace transform argument must be >= 0, got {s!r}")
    return arr


def lt_evaluate(phi: LTSpec, s: ArrayLike) -> Any:
    """φ(s) の厳密値（スカラーまたは配列）.

    Raises:
        NegativeArgument: s < 0 の場合
    """
    arr = _check_nonnegative(s)
    value = lt_function(phi)(arr)
    return float(value) if np.ndim(value) == 0 else value


def lt_neg_log(phi: LTSpec, s: ArrayLike) -> Any:
    """-log φ(s) を桁落ちなく計算."""
    arr = _check_nonnegative(s)
    p = phi.params
    family = phi.family

    if family is LTFamily.DEGENERATE:
        value = p["c"] * arr
    elif family is LTFamily.EXPONENTIAL:
        value = np.log1p(arr / p["rate"])
    elif family is LTFamily.GAMMA:
        value = p["shape"] * np.log1p(arr / p["rate"])
    elif family is LTFamily.POSITIVE_STABLE:
        value = (p["scale"] * arr) ** p["alpha"]
    else:
        value = np.log1p((p["scale"] * arr) ** p["alpha"])
    return float(value) if np.ndim(value) == 0 else value


def stable_base_series(alpha: float, order: int) -> Series:
    """(1 - s)^α の係数 C(α, n)(-1)^n."""
    n = np.arange(order + 1)
    return Series(special.binom(alpha, n) * (-1.0) ** n)


def pgf_from_lt(phi: LTSpec, order: int) -> ProbSeq:
    """Q(s) = φ(1 - s) の係数列.

    族ごとの既知の展開を使う:
    Degenerate → ポアソン、Exponential → 幾何、Gamma → 負の二項、
    PositiveStable → 離散安定、MittagLeffler → 1/(1 + λ(1-s)^α) の逆数級数。

    Args:
        phi: ラプラス変換
        order: 打ち切り次数

    Returns:
        ProbSeq（tail_bound = 1 - Σp）

    Raises:
        CoefficientExtractionFailure: 係数が非負にならない場合
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")

    p = phi.params
    family = phi.family

    if family is LTFamily.DEGENERATE:
        return ProbSeq.poisson(p["c"], order)
    if family is LTFamily.EXPONENTIAL:
        return ProbSeq.geometric(p["rate"] / (1.0 + p["rate"]), order)
    if family is LTFamily.GAMMA:
        return ProbSeq.negative_binomial(p["shape"], p["rate"] / (1.0 + p["rate"]), order)

    lam = p["scale"] ** p["alpha"]
    base = stable_base_series(p["alpha"], order)
    if family is LTFamily.POSITIVE_STABLE:
        coeffs = series_exp(base.scale(-lam))
    else:
        coeffs = series_reciprocal(base.scale(lam) + Series.constant(1.0, order))
    return _to_probseq(coeffs, phi.describe())


def _to_probseq(coeffs: Series, label: str) -> ProbSeq:
    try:
        return ProbSeq.from_coefficients(coeffs)
    except InvalidPmf as e:
        raise CoefficientExtractionFailure(f"Coefficients of {label} are not a pmf prefix: {e}") from e


def pgf_spec_from_lt(phi: LTSpec) -> PGFSpec:
    """閉形式 PGF s ↦ φ(1 - s)."""
    f = lt_function(phi)
    return PGFSpec.closed_form(lambda z: f(1.0 - z), label=f"lt:{phi.describe()}")


def mixed_discrete_stable_pgf(phi: LTSpec, alpha: float, lam: float = 1.0) -> PGFSpec:
    """閉形式 PGF s ↦ φ(λ(1 - s)^α)（離散安定則の φ 混合）."""
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must be in (0, 1], got {alpha}")
    f = lt_function(phi)
    return PGFSpec.closed_form(
        lambda z: f(lam * (1.0 - z) ** alpha),
        label=f"mixed-dstable:{phi.describe()},alpha={alpha:g},lambda={lam:g}",
    )


def pgf_coefficients(
    q: PGFSpec,
    order: int,
    radius: float = DEFAULT_CONTOUR_RADIUS,
    min_points: int = DEFAULT_CONTOUR_POINTS,
) -> Series:
    """PGFSpec の係数列（確率列はそのまま、閉形式は周回積分で抽出）.

    Raises:
        CoefficientExtractionFailure: 抽出が発散した場合
    """
    if q.probseq is not None:
        return q.probseq.padded(order).as_series()
    assert q.evaluator is not None
    try:
        return series_from_function(q.evaluator, order, radius=radius, min_points=min_points)
    except SeriesError as e:
        raise CoefficientExtractionFailure(f"Extraction failed for {q.label}: {e}") from e


def pgf_probseq(q: PGFSpec, order: int, radius: Optional[float] = None) -> ProbSeq:
    """PGFSpec を確率列に変換."""
    if q.probseq is not None:
        return q.probseq.padded(order)
    coeffs = pgf_coefficients(q, order, radius=radius or DEFAULT_CONTOUR_RADIUS)
    return _to_probseq(coeffs, q.label)
