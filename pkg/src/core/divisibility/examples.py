"""台にギャップを持つ例の分布."""
from enum import Enum

import numpy as np
from scipy import stats

from src.models import ProbSeq


class ExampleKind(str, Enum):
    EX1A = "ex1a"  # {p / (1 - q s^k)}^t
    EX1B = "ex1b"  # s · {p / (1 - q s^k)}^t


def make_example_law(
    kind: ExampleKind,
    p: float,
    k: int,
    t: float,
    order: int,
) -> ProbSeq:
    """PGF {p/(1-qs^k)}^t（ex1a）または s{p/(1-qs^k)}^t（ex1b）の係数列.

    質量は k の倍数（ex1b は 1 ずらした位置）にのみ乗る。
    """
    kind = ExampleKind(kind)
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must be in (0, 1), got {p}")
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")

    shift = 1 if kind is ExampleKind.EX1B else 0
    if t == 0:
        return ProbSeq.degenerate(shift, order)

    m_max = (order - shift) // k
    m = np.arange(m_max + 1)
    dist = stats.nbinom(t, p)

    coeffs = np.zeros(order + 1)
    coeffs[shift + k * m] = dist.pmf(m)
    tail = float(dist.sf(m_max))
    if abs(coeffs.sum() + tail - 1.0) > 1e-12:
        tail = max(0.0, 1.0 - float(coeffs.sum()))
    return ProbSeq(coeffs, tail)
