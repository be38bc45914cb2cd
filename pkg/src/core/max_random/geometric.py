"""幾何分布の標本数での最大・最小の安定性."""
import logging
from typing import Callable, Optional

import numpy as np
from scipy import stats

from src.config import ToleranceConfig, get_settings
from src.core.samplers import ks_distance
from src.models import ConvergenceReport, EmpiricalDist, MaxCaseFamily, MaxStabilityCase, SeededStream

logger = logging.getLogger(__name__)

IDENTITY_GRID = np.linspace(-10.0, 10.0, 401)
POSITIVE_GRID = np.linspace(0.01, 10.0, 400)


def _extreme_level(n: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """N 個の一様乱数の最大の分布関数値 V = U^{1/N} の log."""
    return np.log(rng.uniform(size=n.size)) / n


def _pareto_min(case: MaxStabilityCase, n: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    # 生存関数 1/(1 + x^a) の N 個の最小値を p^{-1/a} 倍する
    assert case.a is not None
    log_v = _extreme_level(n, rng)
    x = (-np.expm1(log_v) / np.exp(log_v)) ** (1.0 / case.a)
    return x * case.p ** (-1.0 / case.a)


def _logistic_max(case: MaxStabilityCase, n: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    log_v = _extreme_level(n, rng)
    return log_v - np.log(-np.expm1(log_v)) + np.log(case.p)


def _exponential_min(case: MaxStabilityCase, n: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    return -_extreme_level(n, rng)


def _pareto_identity(case: MaxStabilityCase) -> float:
    assert case.a is not None
    p, a = case.p, case.a
    survival = 1.0 / (1.0 + POSITIVE_GRID**a)
    lhs = p * survival / (1.0 - (1.0 - p) * survival)
    rhs = 1.0 / (1.0 + (POSITIVE_GRID / p ** (1.0 / a)) ** a)
    return float(np.max(np.abs(lhs - rhs)))


def _logistic_identity(case: MaxStabilityCase) -> float:
    p = case.p
    cdf = stats.logistic.cdf(IDENTITY_GRID)
    lhs = p * cdf / (1.0 - (1.0 - p) * cdf)
    return float(np.max(np.abs(lhs - stats.logistic.cdf(IDENTITY_GRID + np.log(p)))))


def _exponential_identity(case: MaxStabilityCase) -> float:
    p = case.p
    survival = np.exp(-POSITIVE_GRID)
    lhs = p * survival / (1.0 - (1.0 - p) * survival)
    return float(np.max(np.abs(lhs - survival)))


Sampler = Callable[[MaxStabilityCase, np.ndarray, np.random.Generator], np.ndarray]

_CASES: dict[MaxCaseFamily, tuple[Sampler, Callable[[MaxStabilityCase], float]]] = {
    MaxCaseFamily.PARETO_MIN: (_pareto_min, _pareto_identity),
    MaxCaseFamily.LOGISTIC_MAX: (_logistic_max, _logistic_identity),
    MaxCaseFamily.EXPONENTIAL_GEO_MIN: (_exponential_min, _exponential_identity),
}


def _base_cdf(case: MaxStabilityCase) -> Callable[[np.ndarray], np.ndarray]:
    if case.family is MaxCaseFamily.PARETO_MIN:
        a = case.a
        return lambda x: np.where(x > 0, 1.0 - 1.0 / (1.0 + np.abs(x) ** a), 0.0)
    if case.family is MaxCaseFamily.LOGISTIC_MAX:
        return stats.logistic.cdf
    return stats.expon.cdf


def geo_extreme_stability_check(
    case: MaxStabilityCase,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    tolerance: Optional[ToleranceConfig] = None,
) -> ConvergenceReport:
    """N ~ Geometric(p)（{1, 2, ...} 上）個の最大・最小を正規化して元の分布と比べる.

    pareto-min: 最小値 × p^{-1/a} が生存関数 1/(1 + x^a) に従う。
    logistic-max: 最大値 + log p がロジスティック分布に従う。
    exponential-geo-min: 正規化なしの最小値は指数分布にならない（対照ケース）。

    格子上の恒等式のずれが stability_identity 未満、かつ KS が ks_strict 未満なら PASS。
    """
    settings = get_settings()
    tol = tolerance or settings.tolerance
    n = samples or settings.simulation.samples
    base_seed = settings.simulation.seed if seed is None else seed

    sampler, identity = _CASES[case.family]
    rng = SeededStream(base_seed).generator()
    counts = rng.geometric(case.p, size=n).astype(float)
    dist = EmpiricalDist(sampler(case, counts, rng))
    ks = ks_distance(dist, _base_cdf(case))
    deviation = identity(case)
    logger.debug("%s: KS %.4f, identity deviation %.3e", case.describe(), ks, deviation)

    passed = ks < tol.ks_strict and deviation < tol.stability_identity
    return ConvergenceReport(
        theta=[case.p],
        ks=[ks],
        samples=n,
        seed=base_seed,
        verdict="PASS" if passed else "FAIL",
        label=case.describe(),
        parameter="p",
        threshold=tol.ks_strict,
        identity_deviation=deviation,
    )
