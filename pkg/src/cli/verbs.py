"""CLI の動詞ごとの処理.

各処理は検証済みのパラメータと RunContext を受け取り、VerbResult を返す。
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional

import numpy as np

from src.config import get_settings
from src.core.divisibility import (
    compound_poisson_decompose,
    recombination_error,
    support_profile,
)
from src.core.dtype_stable import (
    discrete_selfdecomposable_check,
    discrete_stable_pmf,
    domain_of_attraction_check,
    same_dtype,
    stability_identity_check,
    thin,
)
from src.core.max_random import example2_report, geo_extreme_stability_check, transfer_max_simulate
from src.core.random_sums import (
    lemma3_convergence,
    operator_phi_sum_simulate_2d,
    pphi_pgf,
    pphi_sample,
    theorem7_atom_check,
    transfer_sum_simulate,
)
from src.core.samplers import (
    empirical_lt,
    empirical_pgf,
    sample_discrete_stable,
    sample_exponential_mixture,
    sample_mittag_leffler,
    sample_positive_stable,
)
from src.core.transforms import (
    lt_evaluate,
    lt_candidate_from_pgf,
    mixed_discrete_stable_pgf,
    pgf_from_lt,
)
from src.models import (
    ConvergenceReport,
    Decomposition,
    DiscreteStableSpec,
    EmpiricalDist,
    LTSpec,
    PGFSpec,
    PphiSpec,
    ProbeVerdict,
    ProbSeq,
    SeededStream,
    ThinningParam,
    Verdict,
)

from . import params as P
from .laws import (
    parse_lt_string,
    parse_max_base,
    parse_max_case,
    parse_pgf_string,
    parse_pmf_string,
)

logger = logging.getLogger(__name__)

PROBE_GRID = np.linspace(0.05, 1.0, 20)
PGF_CHECK_POINTS = (0.2, 0.5, 0.8)
LT_CHECK_POINTS = (0.5, 1.0, 2.0)
SURVIVAL_CHECK_POINTS = (0.5, 1.0, 2.0, 4.0)
PMF_CHECK_BINS = 10


class UsageError(ValueError):
    """パラメータの組み合わせが不正."""

    code = "IDLAB-U002"


@dataclass(frozen=True)
class RunContext:
    seed: int
    samples: int
    terms: int


@dataclass
class VerbResult:
    """動詞の実行結果.

    Attributes:
        verdict: PASS / FAIL / ID / NOT_ID / INCONCLUSIVE
        payload: レポートに載せる数値
        csv_header: プロット用 CSV の見出し
        csv_rows: プロット用 CSV の行
        sample_dump: 標本ダンプ（分布・法則名・ストリーム）
    """

    verdict: str
    payload: dict[str, Any]
    csv_header: tuple[str, ...] = ()
    csv_rows: list[tuple[Any, ...]] = field(default_factory=list)
    sample_dump: Optional[tuple[EmpiricalDist, str, SeededStream]] = None


def _pmf_rows(*columns: np.ndarray) -> list[tuple[Any, ...]]:
    length = max(c.size for c in columns)
    rows = []
    for k in range(length):
        rows.append((k, *(float(c[k]) if k < c.size else 0.0 for c in columns)))
    return rows


def _convergence_rows(*reports: ConvergenceReport) -> list[tuple[Any, ...]]:
    return [(theta, *(r.ks[i] for r in reports)) for i, theta in enumerate(reports[0].theta)]


def _decomposition_verdict(d: Decomposition) -> str:
    if d.is_id:
        return "ID"
    if d.verdict is Verdict.INCONCLUSIVE:
        return "INCONCLUSIVE"
    return "NOT_ID"


def _pass(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


# ----------------------------------------------------------------------
# 無限分解可能性
# ----------------------------------------------------------------------
def run_idcheck(p: P.PmfParams, ctx: RunContext) -> VerbResult:
    q = parse_pmf_string(p.pmf, ctx.terms)
    d = compound_poisson_decompose(q)
    payload: dict[str, Any] = {
        "decomposition": d.to_dict(),
        "p0": q.p0,
        "order": q.order,
        "tail_bound": q.tail_bound,
    }
    return VerbResult(_decomposition_verdict(d), payload, ("k", "p_k"), _pmf_rows(q.p))


def run_decompose(p: P.PmfParams, ctx: RunContext) -> VerbResult:
    tol = get_settings().tolerance
    q = parse_pmf_string(p.pmf, ctx.terms)
    d = compound_poisson_decompose(q)
    verdict = _decomposition_verdict(d)
    payload: dict[str, Any] = {
        "decomposition": d.to_dict(),
        "support": support_profile(q, tol.support_threshold).to_dict(),
    }
    columns = [q.p]
    if d.is_id:
        error = recombination_error(q, d)
        payload["recombination_error"] = error
        if error >= tol.recombination:
            logger.warning("Recombination error %.3g exceeds %.3g", error, tol.recombination)
            verdict = "INCONCLUSIVE"
        if d.compounding is not None:
            columns.append(d.compounding.padded(q.order).p)
    header = ("k", "p_k", "a_k") if len(columns) == 2 else ("k", "p_k")
    return VerbResult(verdict, payload, header, _pmf_rows(*columns))


def run_theorem7(p: P.PmfParams, ctx: RunContext) -> VerbResult:
    q = parse_pmf_string(p.pmf, ctx.terms)
    atom = theorem7_atom_check(q)
    payload = {"atom_lower_bound": atom, "not_absolutely_continuous": atom > 0.0}
    return VerbResult(_pass(atom > 0.0), payload)


# ----------------------------------------------------------------------
# D 型・離散安定則
# ----------------------------------------------------------------------
def run_thin(p: P.ThinParams, ctx: RunContext) -> VerbResult:
    q = parse_pmf_string(p.pmf, ctx.terms)
    thinned = thin(q, ThinningParam(p.c))
    payload: dict[str, Any] = {"thinned": thinned.to_dict(), "mean": thinned.mean()}
    verdict = "PASS"
    if p.compare is not None:
        other = parse_pmf_string(p.compare, ctx.terms)
        comparison = same_dtype(other, q, ThinningParam(p.c))
        payload["dtype"] = comparison.to_dict()
        verdict = _pass(comparison.equal)
    return VerbResult(verdict, payload, ("k", "p_k", "thinned_k"), _pmf_rows(q.p, thinned.p))


def run_sdtest(p: P.SdtestParams, ctx: RunContext) -> VerbResult:
    target: PGFSpec
    if p.mix is not None and p.pmf is not None:
        raise UsageError("Give either 'pmf' or 'mix', not both")
    if p.mix is not None:
        target = mixed_discrete_stable_pgf(parse_lt_string(p.mix), p.alpha, p.lam)
    elif p.pmf is not None:
        target = parse_pgf_string(p.pmf, ctx.terms)
    else:
        raise UsageError("sdtest needs 'pmf' or 'mix'")
    result = discrete_selfdecomposable_check(target, c_grid=p.c_grid, order=ctx.terms)
    return VerbResult(result.verdict, {"selfdecomposability": result.to_dict(), "law": target.label})


def run_stable_check(p: P.StableCheckParams, ctx: RunContext) -> VerbResult:
    tol = get_settings().tolerance
    spec = DiscreteStableSpec(p.alpha, p.lam)
    deviations = {str(n): stability_identity_check(spec, n) for n in p.n}
    identity_ok = all(v < tol.stability_identity for v in deviations.values())
    pmf = discrete_stable_pmf(spec, ctx.terms)
    payload: dict[str, Any] = {
        "law": spec.to_dict(),
        "identity_deviation": deviations,
        "pmf": pmf.to_dict(),
    }
    ok = identity_ok
    if p.phi is not None:
        report = domain_of_attraction_check(
            parse_lt_string(p.phi),
            p.alpha,
            p.n_list,
            norming_scale=p.norming_scale,
            norming_index=p.norming_index,
        )
        payload["attraction"] = report.model_dump()
        ok = ok and report.passed
    return VerbResult(_pass(ok), payload, ("k", "p_k"), _pmf_rows(pmf.p))


# ----------------------------------------------------------------------
# ラプラス変換・ランダム和
# ----------------------------------------------------------------------
def run_pgf_from_lt(p: P.PgfFromLtParams, ctx: RunContext) -> VerbResult:
    phi = parse_lt_string(p.phi)
    q = pgf_from_lt(phi, ctx.terms)
    table = lt_candidate_from_pgf(PGFSpec.from_probseq(q, label=phi.describe()), PROBE_GRID)
    verdict = {
        ProbeVerdict.PASS: "PASS",
        ProbeVerdict.FAIL: "FAIL",
        ProbeVerdict.INCONCLUSIVE: "INCONCLUSIVE",
    }[table.verdict]
    payload = {"pmf": q.to_dict(), "candidate": table.to_dict()}
    return VerbResult(verdict, payload, ("k", "p_k"), _pmf_rows(q.p))


def run_pphi(p: P.PphiParams, ctx: RunContext) -> VerbResult:
    tol = get_settings().tolerance
    spec = PphiSpec(parse_lt_string(p.phi), j=p.j, k=p.k, theta=p.theta)
    q = pphi_pgf(spec, ctx.terms)
    stream = SeededStream(ctx.seed)
    counts = pphi_sample(spec, ctx.samples, stream)

    s = np.array(PGF_CHECK_POINTS)
    empirical = empirical_pgf(counts, s)
    exact = q.evaluate(s)
    bound = tol.mc_sigma / np.sqrt(ctx.samples) + q.tail_bound
    pgf_ok = bool(np.all(np.abs(empirical - exact) < bound))
    congruent = bool(np.all((counts - p.j) % p.k == 0))
    payload = {
        "spec": spec.to_dict(),
        "pmf": q.to_dict(),
        "pgf_check": {
            "s": list(PGF_CHECK_POINTS),
            "empirical": [float(v) for v in empirical],
            "exact": [float(v) for v in exact],
            "bound": float(bound),
        },
        "congruent": congruent,
        "sample_mean": float(np.mean(counts)),
    }
    return VerbResult(_pass(pgf_ok and congruent), payload, ("k", "p_k"), _pmf_rows(q.p))


def run_lemma3(p: P.Lemma3Params, ctx: RunContext) -> VerbResult:
    report = lemma3_convergence(
        parse_lt_string(p.phi), k=p.k, j=p.j, theta_list=p.theta, samples=ctx.samples, seed=ctx.seed
    )
    return VerbResult(report.verdict, report.model_dump(), ("theta", "ks"), _convergence_rows(report))


def run_transfer_sum(p: P.TransferSumParams, ctx: RunContext) -> VerbResult:
    report = transfer_sum_simulate(
        parse_lt_string(p.phi),
        parse_lt_string(p.summand),
        theta_list=p.theta,
        samples=ctx.samples,
        seed=ctx.seed,
        k=p.k,
    )
    return VerbResult(report.verdict, report.model_dump(), ("theta", "ks"), _convergence_rows(report))


def run_opstable2d(p: P.OpStable2dParams, ctx: RunContext) -> VerbResult:
    first, second = operator_phi_sum_simulate_2d(
        parse_lt_string(p.phi),
        p.alpha1,
        p.alpha2,
        theta_list=p.theta,
        samples=ctx.samples,
        seed=ctx.seed,
        summand=p.summand,
        off_diagonal=p.off_diagonal,
    )
    payload = {"axis1": first.model_dump(), "axis2": second.model_dump()}
    return VerbResult(
        _pass(first.passed and second.passed),
        payload,
        ("theta", "ks_axis1", "ks_axis2"),
        _convergence_rows(first, second),
    )


# ----------------------------------------------------------------------
# ランダム最大値
# ----------------------------------------------------------------------
def run_maxstab(p: P.MaxstabParams, ctx: RunContext) -> VerbResult:
    report = geo_extreme_stability_check(parse_max_case(p.case), samples=ctx.samples, seed=ctx.seed)
    return VerbResult(report.verdict, report.model_dump())


def run_phi_mid(p: P.PhiMidParams, ctx: RunContext) -> VerbResult:
    report = transfer_max_simulate(
        parse_lt_string(p.phi),
        parse_max_base(p.base),
        theta_list=p.theta,
        samples=ctx.samples,
        seed=ctx.seed,
    )
    return VerbResult(report.verdict, report.model_dump(), ("theta", "ks"), _convergence_rows(report))


def run_example2(p: P.Example2Params, ctx: RunContext) -> VerbResult:
    table = example2_report()
    ok = table.not_equivalent and table.deviation_at_zero == Fraction(1, 12)
    rows = [
        (float(r.s), float(r.q_x), float(r.q_y), float(r.q_x_thinned), float(r.q_y_thinned))
        for r in table.rows
    ]
    return VerbResult(
        _pass(ok),
        table.to_dict(),
        ("s", "q_x", "q_y", "q_x_thinned", "q_y_thinned"),
        rows,
    )


# ----------------------------------------------------------------------
# 乱数生成
# ----------------------------------------------------------------------
def _lt_check(dist: EmpiricalDist, phi: LTSpec, sigmas: float) -> dict[str, Any]:
    """経験ラプラス変換と φ(s) の比較（σ² = φ(2s) - φ(s)²）."""
    s = np.array(LT_CHECK_POINTS)
    empirical = empirical_lt(dist, s)
    exact = np.asarray(lt_evaluate(phi, s))
    sigma = np.sqrt(np.maximum(lt_evaluate(phi, 2 * s) - exact**2, 0.0) / dist.count)
    return {
        "s": list(LT_CHECK_POINTS),
        "empirical": [float(v) for v in empirical],
        "exact": [float(v) for v in exact],
        "passed": bool(np.all(np.abs(empirical - exact) <= sigmas * sigma + 1e-12)),
    }


def _pmf_check(dist: EmpiricalDist, q: ProbSeq, sigmas: float) -> dict[str, Any]:
    k = np.arange(min(PMF_CHECK_BINS, q.order) + 1)
    counts = np.array([np.count_nonzero(dist.values == i) for i in k])
    empirical = counts / dist.count
    exact = q.p[: k.size]
    sigma = np.sqrt(exact * (1.0 - exact) / dist.count)
    return {
        "k": [int(i) for i in k],
        "empirical": [float(v) for v in empirical],
        "exact": [float(v) for v in exact],
        "passed": bool(np.all(np.abs(empirical - exact) <= sigmas * sigma + 1e-12)),
    }


def _survival_check(dist: EmpiricalDist, mixing: LTSpec, sigmas: float) -> dict[str, Any]:
    x = np.array(SURVIVAL_CHECK_POINTS)
    empirical = 1.0 - dist.cdf(x)
    exact = np.asarray(lt_evaluate(mixing, x))
    sigma = np.sqrt(exact * (1.0 - exact) / dist.count)
    return {
        "x": list(SURVIVAL_CHECK_POINTS),
        "empirical": [float(v) for v in empirical],
        "exact": [float(v) for v in exact],
        "passed": bool(np.all(np.abs(empirical - exact) <= sigmas * sigma + 1e-12)),
    }


def run_simulate(p: P.SimulateParams, ctx: RunContext) -> VerbResult:
    tol = get_settings().tolerance
    stream = SeededStream(ctx.seed)
    check: dict[str, Any]
    if p.sampler == "positive-stable":
        dist = sample_positive_stable(p.alpha, ctx.samples, stream)
        law = LTSpec.positive_stable(p.alpha)
        check = _lt_check(dist, law, tol.mc_sigma)
        label = law.describe()
    elif p.sampler == "mittag-leffler":
        dist = sample_mittag_leffler(p.alpha, ctx.samples, stream)
        law = LTSpec.mittag_leffler(p.alpha)
        check = _lt_check(dist, law, tol.mc_sigma)
        label = law.describe()
    elif p.sampler == "discrete-stable":
        spec = DiscreteStableSpec(p.alpha, p.lam)
        dist = sample_discrete_stable(spec, ctx.samples, stream)
        check = _pmf_check(dist, discrete_stable_pmf(spec, ctx.terms), tol.mc_sigma_pmf)
        label = spec.describe()
    else:
        if p.mixing is None:
            raise UsageError("exponential-mixture needs 'mixing'")
        mixing = parse_lt_string(p.mixing)
        dist = sample_exponential_mixture(mixing, ctx.samples, stream)
        check = _survival_check(dist, mixing, tol.mc_sigma)
        label = f"expmix:{mixing.describe()}"
    payload = {"law": label, "count": dist.count, "mean": float(np.mean(dist.values)), "check": check}
    return VerbResult(_pass(check["passed"]), payload, sample_dump=(dist, label, stream))


Handler = Callable[[Any, RunContext], VerbResult]

HANDLERS: dict[str, Handler] = {
    "idcheck": run_idcheck,
    "decompose": run_decompose,
    "thin": run_thin,
    "sdtest": run_sdtest,
    "stable-check": run_stable_check,
    "pgf-from-lt": run_pgf_from_lt,
    "pphi": run_pphi,
    "lemma3": run_lemma3,
    "transfer-sum": run_transfer_sum,
    "theorem7": run_theorem7,
    "opstable2d": run_opstable2d,
    "maxstab": run_maxstab,
    "phi-mid": run_phi_mid,
    "simulate": run_simulate,
    "example2": run_example2,
}
