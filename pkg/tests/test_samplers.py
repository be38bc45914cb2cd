"""乱数生成器と経験分布の距離のテスト."""
import csv

import numpy as np
import pytest
from scipy import stats

from src.core.dtype_stable import discrete_stable_pmf
from src.core.samplers import (
    EmptySample,
    discrete_ks_distance,
    draw_discrete_stable,
    draw_poisson,
    empirical_lt,
    is_nonincreasing,
    ks_distance,
    map_streams,
    sample_discrete_stable,
    sample_exponential_mixture,
    sample_mittag_leffler,
    sample_positive_stable,
    sample_thinned,
    sum_iid,
    write_samples_csv,
)
from src.models import DiscreteStableSpec, EmpiricalDist, LTSpec, ProbSeq, SeededStream

N = 100_000
S = np.array([0.5, 1.0, 2.0])


class TestStreams:
    def test_same_stream_same_draws(self):
        a = sample_positive_stable(0.5, 1000, SeededStream(7, 3))
        b = sample_positive_stable(0.5, 1000, SeededStream(7, 3))
        np.testing.assert_array_equal(a.values, b.values)

    def test_streams_are_distinct(self):
        a = sample_positive_stable(0.5, 1000, SeededStream(7, 0))
        b = sample_positive_stable(0.5, 1000, SeededStream(7, 1))
        assert not np.array_equal(a.values, b.values)

    def test_results_do_not_depend_on_workers(self):
        def task(alpha, stream):
            return float(sample_mittag_leffler(alpha, 500, stream).mean())

        alphas = [0.3, 0.5, 0.7, 0.9]
        assert map_streams(task, alphas, 5, workers=1) == map_streams(task, alphas, 5, workers=4)

    def test_negative_seed(self):
        with pytest.raises(ValueError):
            SeededStream(-1)


class TestLaplaceTransforms:
    """経験ラプラス変換と閉形式の差は 3σ 以内."""

    def test_positive_stable(self):
        dist = sample_positive_stable(0.5, N, SeededStream(1))
        np.testing.assert_array_less(np.abs(empirical_lt(dist, S) - np.exp(-np.sqrt(S))), 3 / np.sqrt(N))

    def test_positive_stable_alpha_one_is_degenerate(self):
        np.testing.assert_array_equal(sample_positive_stable(1.0, 10, SeededStream(1)).values, 1.0)

    @pytest.mark.parametrize("alpha", [0.3, 0.5, 0.8])
    def test_mittag_leffler(self, alpha):
        dist = sample_mittag_leffler(alpha, N, SeededStream(2))
        expected = 1.0 / (1.0 + S**alpha)
        np.testing.assert_array_less(np.abs(empirical_lt(dist, S) - expected), 3 / np.sqrt(N))

    def test_exponential_mixture_survival(self):
        # P{X > x} = (1 + x)^{-2}
        dist = sample_exponential_mixture(LTSpec.gamma(2.0, 1.0), N, SeededStream(3))
        assert ks_distance(dist, lambda x: 1.0 - (1.0 + np.maximum(x, 0.0)) ** -2.0) < 0.02

    def test_invalid_alpha(self):
        with pytest.raises(ValueError):
            sample_mittag_leffler(1.5, 10, SeededStream(1))


class TestDiscreteSamplers:
    def test_discrete_stable_matches_pmf(self):
        spec = DiscreteStableSpec(0.5, 1.0)
        dist = sample_discrete_stable(spec, N, SeededStream(4))
        assert discrete_ks_distance(dist, discrete_stable_pmf(spec, 60)) < 0.01

    def test_thinning_stability(self):
        # 4 個の和を c = 4^{-1/α} で間引くと元の法則に戻る
        spec = DiscreteStableSpec(0.5, 1.0)
        rng = SeededStream(5).generator()
        total = draw_discrete_stable(spec, 4 * N, rng).reshape(N, 4).sum(axis=1)
        thinned = EmpiricalDist(rng.binomial(total.astype(np.int64), 4.0 ** -2.0).astype(float))
        fresh = sample_discrete_stable(spec, N, SeededStream(5, 1))
        assert ks_distance(thinned, fresh) < 0.03

    def test_thinned_sample_mean(self):
        dist = sample_thinned(ProbSeq.poisson(4.0, 60), 0.25, N, SeededStream(6))
        assert dist.mean() == pytest.approx(1.0, abs=3 * np.sqrt(1.0 / N))

    def test_huge_poisson_intensity(self):
        rng = SeededStream(7).generator()
        draws = draw_poisson(np.array([2.0, 1e18]), rng)
        assert draws[1] == pytest.approx(1e18, rel=1e-6)


class TestRandomSums:
    def test_geometric_sum_of_mittag_leffler(self):
        # p^{1/α} 倍した幾何和は元の Mittag-Leffler 則
        p = 0.01
        rng = SeededStream(8).generator()
        counts = rng.geometric(p, size=N).astype(float)
        total = EmpiricalDist(sum_iid(LTSpec.mittag_leffler(0.5), counts, rng) * p**2)
        fresh = sample_mittag_leffler(0.5, N, SeededStream(8, 1))
        assert ks_distance(total, fresh) < 0.03

    def test_sum_of_exponentials_is_gamma(self):
        rng = SeededStream(9).generator()
        total = EmpiricalDist(sum_iid(LTSpec.exponential(2.0), np.full(N, 3.0), rng))
        assert ks_distance(total, stats.gamma(3.0, scale=0.5).cdf) < 0.02

    def test_empty_sums_are_zero(self):
        rng = SeededStream(10).generator()
        for phi in (LTSpec.exponential(1.0), LTSpec.mittag_leffler(0.5), LTSpec.positive_stable(0.5)):
            np.testing.assert_array_equal(sum_iid(phi, np.zeros(5), rng), 0.0)


class TestDistances:
    def test_identical_samples(self):
        dist = EmpiricalDist(np.arange(10.0))
        assert ks_distance(dist, dist) == 0.0

    def test_atom_window(self):
        dist = EmpiricalDist(np.array([0.9, 1.0, 1.1, 3.0]))
        step = lambda x: (np.asarray(x) >= 1.0).astype(float)  # noqa: E731
        assert ks_distance(dist, step, atoms=(1.0,), atom_window=0.25) == pytest.approx(0.25)

    def test_empty_sample(self):
        with pytest.raises(EmptySample):
            ks_distance(EmpiricalDist(np.array([])), stats.norm.cdf)

    def test_is_nonincreasing(self):
        assert is_nonincreasing([0.3, 0.1, 0.102, 0.05], 0.005)
        assert not is_nonincreasing([0.3, 0.1, 0.2], 0.005)


def test_write_samples_csv(tmp_path):
    dist = EmpiricalDist(np.array([2.0, 0.5]))
    path = write_samples_csv(tmp_path / "out" / "samples.csv", dist, "ml:alpha=0.5", SeededStream(3, 2))
    with open(path, encoding="utf-8", newline="") as f:
        rows = list(csv.reader(f))
    assert rows[0] == ["law=ml:alpha=0.5", "seed=3", "stream_id=2"]
    assert [float(r[0]) for r in rows[1:]] == [0.5, 2.0]
