"""φ-MID 則と N_θ 最大値の収束シミュレーション."""
import logging
from typing import Callable, Optional, Sequence

import numpy as np

from src.config import ToleranceConfig, get_settings
from src.core.random_sums import draw_pphi
from src.core.samplers import is_nonincreasing, ks_distance, map_streams
from src.core.transforms import lt_function
from src.models import (
    ConvergenceReport,
    EmpiricalDist,
    LTSpec,
    MaxBase,
    MaxBaseFamily,
    MIDTarget,
    MIDTargetFamily,
    PphiSpec,
    SeededStream,
)

logger = logging.getLogger(__name__)


class MaxRandomError(Exception):
    """ランダム最大値エラー."""

    code = "IDLAB-X001"


class DomainError(MaxRandomError):
    """極限分布の台の外の点."""

    code = "IDLAB-X002"


class UnsupportedBase(MaxRandomError):
    """最大値の正規化定数が既知でない基底分布."""

    code = "IDLAB-X003"


def _neg_log_g(target: MIDTarget, x: np.ndarray) -> np.ndarray:
    """-log G(x)（Fréchet は x > 0 の点のみ有効）."""
    if target.family is MIDTargetFamily.FRECHET:
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.where(x > 0, np.abs(x) ** -target.a, np.inf)
    with np.errstate(over="ignore"):
        return np.exp(-x)


def phi_mid_df(phi: LTSpec, target: MIDTarget, x: float) -> float:
    """F(x) = φ(-log G(x)).

    Raises:
        DomainError: x が G の台の外の場合
    """
    if not np.isfinite(x) or (target.family is MIDTargetFamily.FRECHET and x <= 0):
        raise DomainError(f"x = {x!r} is outside the support of {target.describe()}")
    return float(lt_function(phi)(_neg_log_g(target, np.asarray(float(x)))))


def phi_mid_cdf(phi: LTSpec, target: MIDTarget) -> Callable[[np.ndarray], np.ndarray]:
    """phi_mid_df を配列に拡張した分布関数（台の外は 0）."""
    f = lt_function(phi)

    def cdf(x: np.ndarray) -> np.ndarray:
        arr = np.asarray(x, dtype=float)
        s = _neg_log_g(target, arr)
        with np.errstate(invalid="ignore", over="ignore"):
            values = np.where(np.isfinite(s), f(np.where(np.isfinite(s), s, 0.0)), 0.0)
        return np.asarray(values, dtype=float)

    return cdf


def _exponential_max(counts: np.ndarray, theta: float, rng: np.random.Generator) -> np.ndarray:
    # F(M) = U^{1/N}, M - log(1/θ)
    with np.errstate(divide="ignore"):
        log_v = np.log(rng.uniform(size=counts.size)) / counts
        return -np.log(-np.expm1(log_v)) + np.log(theta)


def _pareto_max(a: float) -> Callable[[np.ndarray, float, np.random.Generator], np.ndarray]:
    def draw(counts: np.ndarray, theta: float, rng: np.random.Generator) -> np.ndarray:
        # 生存関数 x^{-a} (x ≥ 1) の最大値を θ^{1/a} 倍する
        with np.errstate(divide="ignore"):
            log_v = np.log(rng.uniform(size=counts.size)) / counts
            return (-np.expm1(log_v)) ** (-1.0 / a) * theta ** (1.0 / a)

    return draw


def _max_setup(
    base: MaxBase,
) -> tuple[MIDTarget, Callable[[np.ndarray, float, np.random.Generator], np.ndarray]]:
    if base.family is MaxBaseFamily.EXPONENTIAL:
        return MIDTarget.gumbel(), _exponential_max
    if base.family is MaxBaseFamily.PARETO and base.a is not None:
        return MIDTarget.frechet(base.a), _pareto_max(base.a)
    raise UnsupportedBase(f"No max-norming constants known for base {base.describe()}")


def transfer_max_simulate(
    phi: LTSpec,
    base: MaxBase,
    theta_list: Optional[Sequence[float]] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
    tolerance: Optional[ToleranceConfig] = None,
) -> ConvergenceReport:
    """N_θ（P_φ, k = 1, j = 0）個の H 乱数の正規化最大値と φ(-log G) の距離.

    Exp(1) は b_θ = log(1/θ) で Gumbel、Pareto(a) は a_θ = θ^{-1/a} で Fréchet(a) へ。
    N_θ = 0 の最大値は -inf とする。

    Raises:
        UnsupportedBase: 正規化定数が既知でない基底分布の場合
    """
    target, draw_max = _max_setup(base)
    settings = get_settings()
    tol = tolerance or settings.tolerance
    sim = settings.simulation
    thetas = [float(t) for t in (theta_list or sim.theta_schedule)]
    n = samples or sim.samples
    base_seed = sim.seed if seed is None else seed
    cdf = phi_mid_cdf(phi, target)

    def run(theta: float, stream: SeededStream) -> float:
        rng = stream.generator()
        counts = draw_pphi(PphiSpec(phi, theta=theta), n, rng)
        maxima = np.where(counts > 0, draw_max(counts, theta, rng), -np.inf)
        ks = ks_distance(EmpiricalDist(maxima), cdf)
        logger.debug("theta=%g: KS %.4f", theta, ks)
        return ks

    distances = map_streams(run, thetas, base_seed, workers=workers or sim.workers)
    passed = is_nonincreasing(distances, tol.monotone_slack) and distances[-1] < tol.ks_loose
    return ConvergenceReport(
        theta=thetas,
        ks=distances,
        samples=n,
        seed=base_seed,
        verdict="PASS" if passed else "FAIL",
        label=f"N-max of {base.describe()}, phi={phi.describe()} -> {target.describe()}",
        threshold=tol.ks_loose,
    )
