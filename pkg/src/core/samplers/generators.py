"""確率表現による乱数生成.

正値安定則は一様・指数の比による表現（α = 1 は 1 に退化）、
Mittag-Leffler 則は E^{1/α}·S、離散安定則は Poisson(λ^{1/α}·S)。
"""
import logging
from typing import Callable

import numpy as np

from src.models import DiscreteStableSpec, EmpiricalDist, LTFamily, LTSpec, ProbSeq, SeededStream

logger = logging.getLogger(__name__)

# これを超える強度のポアソン乱数は正規近似で生成する
POISSON_DIRECT_LIMIT = 1e15


class SamplerError(Exception):
    """乱数生成エラー."""

    code = "IDLAB-R001"


class UnsupportedMixingSampler(SamplerError):
    """混合分布の族に乱数生成器がない."""

    code = "IDLAB-R002"


def draw_positive_stable(alpha: float, size: int, rng: np.random.Generator) -> np.ndarray:
    """ラプラス変換 e^{-s^α} の正値安定乱数."""
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must be in (0, 1], got {alpha}")
    if alpha == 1.0:
        return np.ones(size)

    u = rng.uniform(0.0, np.pi, size)
    e = rng.standard_exponential(size)
    return (
        np.sin(alpha * u)
        / np.sin(u) ** (1.0 / alpha)
        * (np.sin((1.0 - alpha) * u) / e) ** ((1.0 - alpha) / alpha)
    )


def draw_mittag_leffler(alpha: float, size: int, rng: np.random.Generator) -> np.ndarray:
    """ラプラス変換 1/(1 + s^α) の乱数."""
    e = rng.standard_exponential(size)
    return e ** (1.0 / alpha) * draw_positive_stable(alpha, size, rng)


def draw_poisson(lam: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """強度が配列のポアソン乱数（巨大な強度は正規近似）."""
    lam = np.asarray(lam, dtype=float)
    out = np.empty(lam.shape, dtype=float)
    direct = lam <= POISSON_DIRECT_LIMIT
    out[direct] = rng.poisson(lam[direct])
    if not np.all(direct):
        big = lam[~direct]
        logger.debug("Normal approximation for %d Poisson draws", big.size)
        out[~direct] = np.rint(big + np.sqrt(big) * rng.standard_normal(big.size))
    return out


def _draw_degenerate(phi: LTSpec, size: int, rng: np.random.Generator) -> np.ndarray:
    return np.full(size, phi.params["c"])


def _draw_exponential(phi: LTSpec, size: int, rng: np.random.Generator) -> np.ndarray:
    return rng.standard_exponential(size) / phi.params["rate"]


def _draw_gamma(phi: LTSpec, size: int, rng: np.random.Generator) -> np.ndarray:
    return rng.standard_gamma(phi.params["shape"], size) / phi.params["rate"]


def _draw_stable(phi: LTSpec, size: int, rng: np.random.Generator) -> np.ndarray:
    return phi.params["scale"] * draw_positive_stable(phi.params["alpha"], size, rng)


def _draw_ml(phi: LTSpec, size: int, rng: np.random.Generator) -> np.ndarray:
    return phi.params["scale"] * draw_mittag_leffler(phi.params["alpha"], size, rng)


_LT_SAMPLERS: dict[LTFamily, Callable[[LTSpec, int, np.random.Generator], np.ndarray]] = {
    LTFamily.DEGENERATE: _draw_degenerate,
    LTFamily.EXPONENTIAL: _draw_exponential,
    LTFamily.GAMMA: _draw_gamma,
    LTFamily.POSITIVE_STABLE: _draw_stable,
    LTFamily.MITTAG_LEFFLER: _draw_ml,
}


def draw_lt_variates(phi: LTSpec, size: int, rng: np.random.Generator) -> np.ndarray:
    """ラプラス変換 φ を持つ非負乱数.

    Raises:
        UnsupportedMixingSampler: 族に乱数生成器がない場合
    """
    sampler = _LT_SAMPLERS.get(phi.family)
    if sampler is None:
        raise UnsupportedMixingSampler(f"No variate sampler for family '{phi.family}'")
    return sampler(phi, size, rng)


def sum_iid(summand: LTSpec, counts: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """各 N について N 個の独立同分布の和を、族の再生性で一度に生成.

    Exp/Gamma → ガンマ、PositiveStable → N^{1/α}·S、
    MittagLeffler → Gamma(N)^{1/α}·S、Degenerate → N·c。
    """
    counts = np.asarray(counts, dtype=float)
    size = counts.size
    p = summand.params
    family = summand.family
    positive = counts > 0

    if family is LTFamily.DEGENERATE:
        return counts * p["c"]
    if family is LTFamily.EXPONENTIAL:
        g = rng.standard_gamma(np.where(positive, counts, 1.0))
        return np.where(positive, g, 0.0) / p["rate"]
    if family is LTFamily.GAMMA:
        shape = counts * p["shape"]
        g = rng.standard_gamma(np.where(positive, shape, 1.0))
        return np.where(positive, g, 0.0) / p["rate"]

    alpha, scale = p["alpha"], p["scale"]
    s = draw_positive_stable(alpha, size, rng)
    if family is LTFamily.POSITIVE_STABLE:
        return scale * counts ** (1.0 / alpha) * s
    g = rng.standard_gamma(np.where(positive, counts, 1.0))
    return np.where(positive, scale * g ** (1.0 / alpha) * s, 0.0)


def sample_positive_stable(alpha: float, n: int, stream: SeededStream) -> EmpiricalDist:
    """正値安定則 e^{-s^α} の標本."""
    return EmpiricalDist(draw_positive_stable(alpha, n, stream.generator()))


def sample_mittag_leffler(alpha: float, n: int, stream: SeededStream) -> EmpiricalDist:
    """Mittag-Leffler 則 1/(1 + s^α) の標本."""
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must be in (0, 1], got {alpha}")
    return EmpiricalDist(draw_mittag_leffler(alpha, n, stream.generator()))


def draw_discrete_stable(spec: DiscreteStableSpec, size: int, rng: np.random.Generator) -> np.ndarray:
    intensity = spec.lam ** (1.0 / spec.alpha) * draw_positive_stable(spec.alpha, size, rng)
    return draw_poisson(intensity, rng)


def sample_discrete_stable(spec: DiscreteStableSpec, n: int, stream: SeededStream) -> EmpiricalDist:
    """離散安定則 exp{-λ(1-s)^α} の標本（混合ポアソン表現）."""
    return EmpiricalDist(draw_discrete_stable(spec, n, stream.generator()))


def sample_exponential_mixture(mixing: LTSpec, n: int, stream: SeededStream) -> EmpiricalDist:
    """指数分布の尺度混合 X = E/W（W は mixing の乱数）.

    生存関数は P{X > x} = φ_W(x)。

    Raises:
        UnsupportedMixingSampler: mixing の族に乱数生成器がない場合
    """
    rng = stream.generator()
    w = draw_lt_variates(mixing, n, rng)
    e = rng.standard_exponential(n)
    return EmpiricalDist(e / w)


def draw_from_pmf(q: ProbSeq, size: int, rng: np.random.Generator) -> np.ndarray:
    """確率列からの乱数（打ち切り窓内で正規化）."""
    if q.tail_bound > 1e-9:
        logger.warning("Sampling a pmf prefix with tail mass %.3g dropped", q.tail_bound)
    probs = q.p / q.p.sum()
    return rng.choice(q.p.size, size=size, p=probs).astype(float)


def sample_thinned(q: ProbSeq, c: float, n: int, stream: SeededStream) -> EmpiricalDist:
    """c∘Y = Σ_{i≤Y} Bernoulli(c) の標本."""
    rng = stream.generator()
    y = draw_from_pmf(q, n, rng).astype(np.int64)
    return EmpiricalDist(rng.binomial(y, c).astype(float))
