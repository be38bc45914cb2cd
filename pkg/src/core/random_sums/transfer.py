"""φ-ID 則と N_θ 和の収束シミュレーション."""
import logging
from typing import Any, Optional, Sequence

import numpy as np
from numpy.typing import ArrayLike

from src.config import ToleranceConfig, get_settings
from src.core.samplers import is_nonincreasing, map_streams, sum_iid
from src.core.transforms import NegativeArgument, bernstein_probe, lt_evaluate
from src.models import (
    ConvergenceReport,
    EmpiricalDist,
    LTFamily,
    LTSpec,
    PhiIDSpec,
    PphiSpec,
    ProbeResult,
    SeededStream,
)

from .pphi import draw_pphi
from .targets import ORACLE_STREAM_OFFSET, UnsupportedOffDiagonal, UnsupportedSummand, limit_target

logger = logging.getLogger(__name__)

STABLE_FAMILIES = (LTFamily.POSITIVE_STABLE, LTFamily.MITTAG_LEFFLER)


def phi_id_lt(spec: PhiIDSpec, s: ArrayLike) -> Any:
    """f(s) = φ(ψ(s)).

    Raises:
        NegativeArgument: s < 0 の場合
    """
    arr = np.asarray(s, dtype=float)
    if np.any(arr < 0) or np.any(np.isnan(arr)):
        raise NegativeArgument(f"phi-ID transform argument must be >= 0, got {s!r}")
    return lt_evaluate(spec.phi, spec.psi.evaluate(arr))


def phi_id_probe(spec: PhiIDSpec, grid: ArrayLike, depth: Optional[int] = None) -> ProbeResult:
    """-log φ(ψ(s)) がベルンシュタイン関数に見えるかの数値プローブ."""
    return bernstein_probe(
        lambda x: phi_id_lt(spec, x),
        grid,
        depth or get_settings().tolerance.cm_probe_depth,
    )


def _norming(summand: LTSpec, theta: float) -> tuple[float, float]:
    """(a_θ, 極限の指数 α) を返す.

    有限平均の加算項は a_θ = mean/θ（α = 1）、裾指数 α < 1 の安定型は a_θ = θ^{-1/α}。
    """
    if summand.has_finite_mean:
        return summand.mean / theta, 1.0
    if summand.family in STABLE_FAMILIES:
        alpha = summand.params["alpha"]
        return theta ** (-1.0 / alpha), alpha
    raise UnsupportedSummand(f"No classical norming known for summand {summand.describe()}")


def _check_theta_list(theta_list: Sequence[float]) -> list[float]:
    thetas = [float(t) for t in theta_list]
    if not thetas or any(t <= 0 for t in thetas):
        raise ValueError(f"theta_list must be non-empty and positive, got {thetas}")
    return thetas


def transfer_sum_simulate(
    phi: LTSpec,
    summand: LTSpec,
    theta_list: Optional[Sequence[float]] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    k: int = 1,
    workers: Optional[int] = None,
    tolerance: Optional[ToleranceConfig] = None,
) -> ConvergenceReport:
    """S = Σ_{i≤N_θ} X_i / a_θ の経験分布と φ-ID 極限の距離.

    有限平均の加算項の極限は k·U の法則、安定型（α < 1）の加算項の極限は
    ラプラス変換 φ(k (σs)^α) の法則（σ は加算項の尺度）。
    距離列が monotone_slack の範囲で非増加、かつ最後の値が ks_loose 未満なら PASS。

    Raises:
        UnsupportedSummand: 正規化定数が既知でない加算項の場合
    """
    settings = get_settings()
    tol = tolerance or settings.tolerance
    sim = settings.simulation
    thetas = _check_theta_list(theta_list or sim.theta_schedule)
    n = samples or sim.samples
    base_seed = sim.seed if seed is None else seed

    _, alpha = _norming(summand, thetas[0])
    scale = 1.0 if summand.has_finite_mean else summand.params["scale"]
    target = limit_target(phi, alpha=alpha, k=k, scale=scale)

    def run(theta: float, stream: SeededStream) -> float:
        rng = stream.generator()
        counts = draw_pphi(PphiSpec(phi, k=k, theta=theta), n, rng)
        a_theta, _ = _norming(summand, theta)
        dist = EmpiricalDist(sum_iid(summand, counts, rng) / a_theta)
        ks = target.distance(dist, stream.child(ORACLE_STREAM_OFFSET), tol)
        logger.debug("theta=%g: a_theta=%.4g, KS %.4f", theta, a_theta, ks)
        return ks

    distances = map_streams(run, thetas, base_seed, workers=workers or sim.workers)
    passed = is_nonincreasing(distances, tol.monotone_slack) and distances[-1] < tol.ks_loose
    return ConvergenceReport(
        theta=thetas,
        ks=distances,
        samples=n,
        seed=base_seed,
        verdict="PASS" if passed else "FAIL",
        label=f"N-sum of {summand.describe()}, phi={phi.describe()} -> {target.label}",
        threshold=tol.ks_loose,
    )


def operator_phi_sum_simulate_2d(
    phi: LTSpec,
    alpha1: float,
    alpha2: float,
    theta_list: Optional[Sequence[float]] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    summand: str = "stable",
    off_diagonal: float = 0.0,
    workers: Optional[int] = None,
    tolerance: Optional[ToleranceConfig] = None,
) -> tuple[ConvergenceReport, ConvergenceReport]:
    """対角作用素 A_θ = diag(θ^{1/α1}, θ^{1/α2}) で正規化した 2 次元 N_θ 和.

    座標は独立な加算項（summand="stable" なら正値安定(α_i)、"exponential" なら
    Exp(1) で α_i = 1 のみ）で、N_θ は座標間で共通。座標ごとの周辺の極限
    φ(s^{α_i}) との距離を返す。

    Raises:
        UnsupportedOffDiagonal: off_diagonal が 0 でない場合
    """
    if off_diagonal != 0.0:
        raise UnsupportedOffDiagonal(
            f"Only diagonal operator norming is supported, got off-diagonal {off_diagonal!r}"
        )
    alphas = (alpha1, alpha2)
    for a in alphas:
        if not 0.0 < a <= 1.0:
            raise ValueError(f"alpha must be in (0, 1], got {a}")
    if summand == "exponential":
        if alphas != (1.0, 1.0):
            raise UnsupportedSummand("Exponential summands need alpha1 = alpha2 = 1")
        summands = (LTSpec.exponential(1.0), LTSpec.exponential(1.0))
    elif summand == "stable":
        summands = (LTSpec.positive_stable(alpha1), LTSpec.positive_stable(alpha2))
    else:
        raise UnsupportedSummand(f"Unknown summand kind '{summand}' (expected stable or exponential)")

    settings = get_settings()
    tol = tolerance or settings.tolerance
    sim = settings.simulation
    thetas = _check_theta_list(theta_list or sim.theta_schedule)
    n = samples or sim.samples
    base_seed = sim.seed if seed is None else seed
    targets = [limit_target(phi, alpha=a) for a in alphas]

    def run(theta: float, stream: SeededStream) -> tuple[float, float]:
        rng = stream.generator()
        counts = draw_pphi(PphiSpec(phi, theta=theta), n, rng)
        distances = []
        for axis, (x, a, target) in enumerate(zip(summands, alphas, targets)):
            dist = EmpiricalDist(sum_iid(x, counts, rng) * theta ** (1.0 / a))
            oracle_stream = stream.child(ORACLE_STREAM_OFFSET * (axis + 1))
            distances.append(target.distance(dist, oracle_stream, tol))
        logger.debug("theta=%g: marginal KS %.4f, %.4f", theta, *distances)
        return distances[0], distances[1]

    pairs = map_streams(run, thetas, base_seed, workers=workers or sim.workers)
    reports = []
    for axis in range(2):
        distances = [pair[axis] for pair in pairs]
        passed = is_nonincreasing(distances, tol.monotone_slack) and distances[-1] < tol.ks_loose
        reports.append(
            ConvergenceReport(
                theta=thetas,
                ks=distances,
                samples=n,
                seed=base_seed,
                verdict="PASS" if passed else "FAIL",
                label=f"axis {axis + 1}: {summands[axis].describe()}, phi={phi.describe()}",
                threshold=tol.ks_loose,
            )
        )
    return reports[0], reports[1]
