"""ランダム和の極限則と、標本との距離."""
import logging
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy import stats

from src.config import ToleranceConfig
from src.core.samplers import (
    draw_lt_variates,
    draw_mittag_leffler,
    draw_positive_stable,
    ks_distance,
)
from src.models import EmpiricalDist, LTFamily, LTSpec, SeededStream

logger = logging.getLogger(__name__)

# 交差検証用の独立標本のストリーム番号のずらし幅
ORACLE_STREAM_OFFSET = 1000

CDF = Callable[[np.ndarray], np.ndarray]
Oracle = Callable[[int, np.random.Generator], np.ndarray]


class RandomSumError(Exception):
    """ランダム和エラー."""

    code = "IDLAB-N001"


class UnsupportedSummand(RandomSumError):
    """正規化定数が既知でない加算項."""

    code = "IDLAB-N002"


class UnsupportedOffDiagonal(RandomSumError):
    """対角でない作用素正規化."""

    code = "IDLAB-N003"


@dataclass(frozen=True)
class LimitTarget:
    """極限則（閉形式の分布関数、または独立な標本生成器）.

    Attributes:
        label: 表示名
        cdf: 閉形式の分布関数
        atoms: cdf の原子の位置（窓付き KS を使う）
        oracle: 閉形式がない場合の独立な生成器
    """

    label: str
    cdf: Optional[CDF] = None
    atoms: tuple[float, ...] = ()
    oracle: Optional[Oracle] = None

    def distance(
        self,
        dist: EmpiricalDist,
        stream: SeededStream,
        tolerance: ToleranceConfig,
    ) -> float:
        """標本と極限則のコルモゴロフ距離（oracle は stream で独立標本を生成）."""
        if self.cdf is not None:
            window = tolerance.atom_window if self.atoms else 0.0
            return ks_distance(dist, self.cdf, atoms=self.atoms, atom_window=window)
        assert self.oracle is not None
        reference = EmpiricalDist(self.oracle(dist.count, stream.generator()))
        return ks_distance(dist, reference)


def limit_target(phi: LTSpec, alpha: float = 1.0, k: int = 1, scale: float = 1.0) -> LimitTarget:
    """V = scale · (kU)^{1/α} · S_α の法則（U は φ の乱数、S_α は独立な正値安定、α = 1 で S = 1）.

    ラプラス変換は φ(k (scale·s)^α)。閉形式の分布関数がある組み合わせ
    （α = 1 の Degenerate/Exponential/Gamma、Degenerate と α = 1/2 の Lévy 則）
    はそれを、残りは独立な標本生成器を使う。
    """
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must be in (0, 1], got {alpha}")
    p = phi.params
    family = phi.family
    label = f"{phi.describe()} limit (k={k}, alpha={alpha:g}, scale={scale:g})"

    if alpha == 1.0:
        factor = k * scale
        if family is LTFamily.DEGENERATE:
            atom = factor * p["c"]
            return LimitTarget(label, cdf=lambda x: (np.asarray(x) >= atom).astype(float), atoms=(atom,))
        if family is LTFamily.EXPONENTIAL:
            return LimitTarget(label, cdf=stats.expon(scale=factor / p["rate"]).cdf)
        if family is LTFamily.GAMMA:
            return LimitTarget(label, cdf=stats.gamma(p["shape"], scale=factor / p["rate"]).cdf)
        scaled = phi.scaled(float(factor))
        return LimitTarget(label, oracle=lambda n, rng: draw_lt_variates(scaled, n, rng))

    if family is LTFamily.DEGENERATE:
        b = scale * (k * p["c"]) ** (1.0 / alpha)
        if alpha == 0.5:
            # e^{-sqrt(s)} は尺度 1/2 の Lévy 則
            return LimitTarget(label, cdf=stats.levy(scale=0.5 * b).cdf)
        return LimitTarget(label, oracle=lambda n, rng: b * draw_positive_stable(alpha, n, rng))

    if family is LTFamily.EXPONENTIAL:
        b = scale * (k / p["rate"]) ** (1.0 / alpha)
        return LimitTarget(label, oracle=lambda n, rng: b * draw_mittag_leffler(alpha, n, rng))

    def oracle(n: int, rng: np.random.Generator) -> np.ndarray:
        u = draw_lt_variates(phi, n, rng)
        return scale * (k * u) ** (1.0 / alpha) * draw_positive_stable(alpha, n, rng)

    return LimitTarget(label, oracle=oracle)
