"""打ち切り冪級数の演算.

二つの級数の演算は短い方の次数に揃える。
"""
import logging
from typing import Callable

import numpy as np

from src.models import Series

logger = logging.getLogger(__name__)

DEFAULT_CONTOUR_RADIUS = 0.9
DEFAULT_CONTOUR_POINTS = 4096


class SeriesError(Exception):
    """冪級数演算エラー."""

    code = "IDLAB-S001"


class ZeroConstantTerm(SeriesError):
    """定数項が正でない級数の対数・冪."""

    code = "IDLAB-S002"


def series_log(q: Series) -> Series:
    """log q(s) の係数.

    n·q_n = Σ_{k=1..n} k·L_k·q_{n-k} を L_n について解く。

    Raises:
        ZeroConstantTerm: q_0 <= 0 の場合
    """
    c = q.coeffs
    if c[0] <= 0:
        raise ZeroConstantTerm(f"log needs a positive constant term, got q_0 = {c[0]!r}")

    n_max = q.order
    log_c = np.zeros(n_max + 1)
    log_c[0] = np.log(c[0])
    weights = np.arange(n_max + 1, dtype=float)
    for n in range(1, n_max + 1):
        acc = n * c[n] - np.dot(weights[1:n] * log_c[1:n], c[n - 1 : 0 : -1])
        log_c[n] = acc / (n * c[0])
    return Series(log_c)


def series_exp(l: Series) -> Series:  # noqa: E741
    """exp l(s) の係数（series_log の逆）."""
    c = l.coeffs
    n_max = l.order
    out = np.zeros(n_max + 1)
    out[0] = np.exp(c[0])
    weighted = np.arange(n_max + 1, dtype=float) * c
    for n in range(1, n_max + 1):
        out[n] = np.dot(weighted[1 : n + 1], out[n - 1 :: -1]) / n
    return Series(out)


def series_pow(q: Series, t: float) -> Series:
    """q(s)^t = exp(t·log q(s)).

    Raises:
        ZeroConstantTerm: q_0 <= 0 の場合
    """
    if t == 0:
        return Series.constant(1.0, q.order)
    if t == 1:
        return q
    return series_exp(series_log(q).scale(t))


def series_mul(a: Series, b: Series) -> Series:
    """コーシー積."""
    n = min(a.order, b.order) + 1
    return Series(np.convolve(a.coeffs[:n], b.coeffs[:n])[:n])


def series_compose(outer: Series, inner: Series) -> Series:
    """outer(inner(s)) の係数（ホーナー法）.

    inner の定数項が 0 でない場合、outer の打ち切り以降の項の寄与は含まれない。
    """
    if abs(inner.coeffs[0]) > 1.0:
        logger.warning("Composing with inner constant term %.6g outside [-1, 1]", inner.coeffs[0])

    n = min(outer.order, inner.order)
    inner_c = inner.coeffs[: n + 1]
    result = np.zeros(n + 1)
    result[0] = outer.coeffs[outer.order]
    for coeff in outer.coeffs[:-1][::-1]:
        result = np.convolve(result, inner_c)[: n + 1]
        result[0] += coeff
    return Series(result)


def series_reciprocal(q: Series) -> Series:
    """1 / q(s) の係数.

    Raises:
        ZeroConstantTerm: q_0 == 0 の場合
    """
    c = q.coeffs
    if c[0] == 0:
        raise ZeroConstantTerm("reciprocal needs a non-zero constant term")
    n_max = q.order
    r = np.zeros(n_max + 1)
    r[0] = 1.0 / c[0]
    for n in range(1, n_max + 1):
        r[n] = -np.dot(c[1 : n + 1], r[n - 1 :: -1]) / c[0]
    return Series(r)


def series_divide(num: Series, den: Series) -> Series:
    return series_mul(num, series_reciprocal(den))


def contour_point_count(order: int, min_points: int = DEFAULT_CONTOUR_POINTS) -> int:
    """2 のべき乗で 8·(order+1) 以上かつ min_points 以上の点数."""
    target = max(min_points, 8 * (order + 1))
    return 1 << (target - 1).bit_length()


def series_from_function(
    f: Callable[[np.ndarray], np.ndarray],
    order: int,
    radius: float = DEFAULT_CONTOUR_RADIUS,
    min_points: int = DEFAULT_CONTOUR_POINTS,
) -> Series:
    """解析関数の係数を半径 radius の円周上の FFT で取り出す.

    f は複素数配列を受け取り同じ形の配列を返すこと。係数 n の丸め誤差は
    おおよそ eps·max|f| / radius^n。

    Raises:
        SeriesError: f が有限値を返さない場合
    """
    if not 0.0 < radius < 1.0:
        raise SeriesError(f"contour radius must be in (0, 1), got {radius}")

    m = contour_point_count(order, min_points)
    nodes = radius * np.exp(2j * np.pi * np.arange(m) / m)
    values = np.asarray(f(nodes), dtype=complex)
    if values.shape != nodes.shape or not np.all(np.isfinite(values)):
        raise SeriesError("Function returned non-finite values on the extraction contour")

    spectrum = np.fft.fft(values) / m
    coeffs = spectrum[: order + 1].real / radius ** np.arange(order + 1)
    logger.debug("Extracted %d coefficients on %d contour points", order + 1, m)
    return Series(coeffs)

