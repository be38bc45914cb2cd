"""離散安定則と吸引域."""
import logging
from typing import Optional, Sequence

import numpy as np

from src.config import ToleranceConfig, get_settings
from src.core.samplers import is_nonincreasing
from src.core.series_core import series_exp
from src.core.transforms import lt_neg_log, stable_base_series
from src.models import ConvergenceReport, DiscreteStableSpec, LTSpec, PGFSpec, ProbSeq

logger = logging.getLogger(__name__)

S_GRID = np.linspace(0.0, 1.0, 101)


def discrete_stable_pgf(spec: DiscreteStableSpec) -> PGFSpec:
    """閉形式 PGF exp{-λ(1 - s)^α}."""
    lam, alpha = spec.lam, spec.alpha
    return PGFSpec.closed_form(lambda z: np.exp(-lam * (1.0 - z) ** alpha), label=spec.describe())


def discrete_stable_pmf(spec: DiscreteStableSpec, order: int) -> ProbSeq:
    """exp{-λ(1 - s)^α} の係数列（(1 - s)^α の二項級数の指数）."""
    base = stable_base_series(spec.alpha, order)
    return ProbSeq.from_coefficients(series_exp(base.scale(-spec.lam)))


def stability_identity_check(spec: DiscreteStableSpec, n: int) -> float:
    """sup_s |Q(1 - n^{-1/α}(1 - s))^n - Q(s)|（閉形式では厳密に 0）."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    pgf = discrete_stable_pgf(spec)
    a = n ** (-1.0 / spec.alpha)
    lhs = pgf.evaluate(1.0 - a * (1.0 - S_GRID)) ** n
    rhs = pgf.evaluate(S_GRID)
    return float(np.max(np.abs(lhs - rhs)))


def domain_of_attraction_check(
    phi: LTSpec,
    alpha: float,
    n_list: Sequence[int],
    norming_scale: float = 1.0,
    norming_index: Optional[float] = None,
    tolerance: Optional[ToleranceConfig] = None,
) -> ConvergenceReport:
    """d_n = sup_s |-n log φ((1-s)/a_n) - (1-s)^α| の減少を確かめる.

    a_n = norming_scale · n^{1/β}（β = norming_index、省略時は α）。
    d_n が（1e-12 の余裕で）単調非増加かつ最後の値が attraction_final 未満なら PASS。
    """
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must be in (0, 1], got {alpha}")
    if list(n_list) != sorted(n_list) or len(set(n_list)) != len(n_list):
        raise ValueError("n_list must be strictly increasing")
    tol = tolerance or get_settings().tolerance
    beta = alpha if norming_index is None else norming_index

    w = 1.0 - S_GRID
    target = w**alpha
    distances = []
    for n in n_list:
        a_n = norming_scale * n ** (1.0 / beta)
        d_n = float(np.max(np.abs(n * lt_neg_log(phi, w / a_n) - target)))
        distances.append(d_n)
        logger.debug("n=%d: d_n = %.3e", n, d_n)

    monotone = is_nonincreasing(distances, 1e-12)
    passed = monotone and distances[-1] < tol.attraction_final
    return ConvergenceReport(
        theta=[float(n) for n in n_list],
        ks=distances,
        samples=0,
        seed=0,
        verdict="PASS" if passed else "FAIL",
        label=f"{phi.describe()} -> dstable(alpha={alpha:g})",
        parameter="n",
        metric="sup_deviation",
        threshold=tol.attraction_final,
    )
