"""P_φ 族の標本数 N_θ（PGF s^j · φ((1 - s^k)/θ)）.

N_θ は混合ポアソン表現 N = j + k·Poisson(U/θ)（U は φ の乱数）で生成する。
"""
import logging
from typing import Optional, Sequence, Union

import numpy as np

from src.config import ToleranceConfig, get_settings
from src.core.samplers import draw_lt_variates, draw_poisson, is_nonincreasing, map_streams
from src.core.transforms import pgf_from_lt
from src.models import ConvergenceReport, EmpiricalDist, LTSpec, PphiSpec, ProbSeq, SeededStream

from .targets import ORACLE_STREAM_OFFSET, limit_target

logger = logging.getLogger(__name__)


def _as_stream(seed: Union[int, SeededStream]) -> SeededStream:
    return seed if isinstance(seed, SeededStream) else SeededStream(seed)


def pphi_pgf(spec: PphiSpec, order: int) -> ProbSeq:
    """P_θ(s) = s^j · φ((1 - s^k)/θ) の係数列.

    φ(·/θ) の PGF 係数を k おきに並べ、j だけずらす。
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    inner_order = max(1, (order - spec.j) // spec.k)
    inner = pgf_from_lt(spec.phi.scaled(1.0 / spec.theta), inner_order)

    coeffs = np.zeros(order + 1)
    indices = spec.j + spec.k * np.arange(inner.p.size)
    keep = indices <= order
    coeffs[indices[keep]] = inner.p[keep]
    return ProbSeq.from_coefficients(coeffs)


def draw_pphi(spec: PphiSpec, size: int, rng: np.random.Generator) -> np.ndarray:
    u = draw_lt_variates(spec.phi, size, rng)
    return spec.j + spec.k * draw_poisson(u / spec.theta, rng)


def pphi_sample(spec: PphiSpec, n: int, seed: Union[int, SeededStream]) -> np.ndarray:
    """N_θ の独立標本.

    Raises:
        UnsupportedMixingSampler: φ の族に乱数生成器がない場合
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return draw_pphi(spec, n, _as_stream(seed).generator())


def theorem7_atom_check(n_pgf: ProbSeq) -> float:
    """N 和の原点の質量の下界 P{S = 0} ≥ P{N = 0}（正なら絶対連続でない）."""
    return n_pgf.p0


def lemma3_convergence(
    phi: LTSpec,
    k: int = 1,
    j: int = 0,
    theta_list: Optional[Sequence[float]] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
    tolerance: Optional[ToleranceConfig] = None,
) -> ConvergenceReport:
    """θ·N_θ の経験分布と k·U の法則の距離を θ の列に沿って測る.

    距離列が monotone_slack の範囲で非増加、かつ最後の値が ks_strict 未満なら PASS。

    Args:
        phi: 混合のラプラス変換
        k: 標本数の格子の幅
        j: 標本数のずらし
        theta_list: 減少する θ の列（省略時は設定の lemma3_schedule）
        samples: θ ごとの標本数
        seed: 乱数シード（θ の添字 i はストリーム i を使う）
        workers: 並列数
        tolerance: 許容誤差

    Returns:
        ConvergenceReport
    """
    settings = get_settings()
    tol = tolerance or settings.tolerance
    sim = settings.simulation
    thetas = list(theta_list or sim.lemma3_schedule)
    n = samples or sim.samples
    base_seed = sim.seed if seed is None else seed
    target = limit_target(phi, alpha=1.0, k=k)

    def run(theta: float, stream: SeededStream) -> float:
        spec = PphiSpec(phi, j=j, k=k, theta=theta)
        counts = draw_pphi(spec, n, stream.generator())
        dist = EmpiricalDist(theta * counts)
        ks = target.distance(dist, stream.child(ORACLE_STREAM_OFFSET), tol)
        logger.debug("theta=%g: KS %.4f", theta, ks)
        return ks

    distances = map_streams(run, thetas, base_seed, workers=workers or sim.workers)
    passed = is_nonincreasing(distances, tol.monotone_slack) and distances[-1] < tol.ks_strict
    return ConvergenceReport(
        theta=thetas,
        ks=distances,
        samples=n,
        seed=base_seed,
        verdict="PASS" if passed else "FAIL",
        label=f"theta*N -> {k}*U, phi={phi.describe()}, j={j}",
        threshold=tol.ks_strict,
    )
