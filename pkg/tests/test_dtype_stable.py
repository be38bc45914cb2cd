"""二項間引き・離散安定則・離散自己分解可能性のテスト."""
import numpy as np
import pytest
from scipy import stats

from src.core.divisibility import ZeroAtOrigin
from src.core.dtype_stable import (
    bernoulli_series,
    discrete_selfdecomposable_check,
    discrete_stable_pgf,
    discrete_stable_pmf,
    domain_of_attraction_check,
    same_dtype,
    stability_identity_check,
    thin,
)
from src.core.transforms import mixed_discrete_stable_pgf, pgf_probseq
from src.models import DiscreteStableSpec, InvalidSpec, LTSpec, PGFSpec, ProbSeq, ThinningParam


class TestThinning:
    def test_thinned_poisson_is_poisson(self):
        thinned = thin(ProbSeq.poisson(2.0, 64), ThinningParam(0.5))
        np.testing.assert_allclose(thinned.p, stats.poisson(1.0).pmf(np.arange(65)), atol=1e-14)

    def test_thinned_binomial_is_binomial(self):
        thinned = thin(ProbSeq.binomial(4, 0.5), ThinningParam(0.5))
        np.testing.assert_allclose(thinned.p, stats.binom(4, 0.25).pmf(np.arange(5)), atol=1e-15)

    def test_thinning_by_one_is_identity(self):
        q = ProbSeq.geometric(0.4, 16)
        assert thin(q, ThinningParam(1.0)) is q

    def test_thinning_scales_the_mean(self):
        q = ProbSeq.negative_binomial(2.0, 0.6, 80)
        assert thin(q, ThinningParam(0.3)).mean() == pytest.approx(0.3 * q.mean(), rel=1e-9)

    def test_invalid_parameter(self):
        with pytest.raises(InvalidSpec):
            ThinningParam(0.0)
        with pytest.raises(InvalidSpec):
            ThinningParam(1.5)

    def test_bernoulli_series(self):
        np.testing.assert_array_equal(bernoulli_series(0.25, 3).coeffs, [0.75, 0.25, 0.0, 0.0])


class TestSameDtype:
    def test_poisson_pair(self):
        # Q_1(u) = e^{-(1-u)}, Q_2(1 - c + cu) = e^{-2c(1-u)}
        result = same_dtype(ProbSeq.poisson(1.0, 64), ProbSeq.poisson(2.0, 64), ThinningParam(0.5))
        assert result.equal
        assert result.max_deviation < 1e-12

    def test_different_types(self):
        q = ProbSeq.poisson(2.0, 64)
        result = same_dtype(q, q, ThinningParam(0.5))
        assert not result.equal
        assert result.max_deviation > 0.1


class TestDiscreteStable:
    @pytest.mark.parametrize("alpha", [0.3, 0.5, 1.0])
    @pytest.mark.parametrize("n", [2, 4, 7])
    def test_stability_identity(self, alpha, n):
        assert stability_identity_check(DiscreteStableSpec(alpha, 1.0), n) < 1e-12

    def test_identity_needs_n_at_least_two(self):
        with pytest.raises(ValueError):
            stability_identity_check(DiscreteStableSpec(0.5, 1.0), 1)

    def test_alpha_one_is_poisson(self):
        q = discrete_stable_pmf(DiscreteStableSpec(1.0, 2.0), 40)
        np.testing.assert_allclose(q.p, stats.poisson(2.0).pmf(np.arange(41)), atol=1e-14)

    def test_pmf_matches_closed_form(self):
        spec = DiscreteStableSpec(0.5, 1.0)
        series = discrete_stable_pmf(spec, 40)
        closed = pgf_probseq(discrete_stable_pgf(spec), 40)
        np.testing.assert_allclose(series.p, closed.p, atol=1e-11)
        assert series.p0 == pytest.approx(np.exp(-1.0))

    def test_pgf_closed_form(self):
        pgf = discrete_stable_pgf(DiscreteStableSpec(0.7, 2.0))
        assert pgf.evaluate(1.0) == pytest.approx(1.0)
        assert pgf.evaluate(0.0) == pytest.approx(np.exp(-2.0))

    def test_invalid_spec(self):
        with pytest.raises(InvalidSpec):
            DiscreteStableSpec(1.2, 1.0)
        with pytest.raises(InvalidSpec):
            DiscreteStableSpec(0.5, 0.0)


class TestDomainOfAttraction:
    def test_exponential_towards_poisson(self):
        report = domain_of_attraction_check(LTSpec.exponential(1.0), 1.0, [10, 100, 1000])
        assert report.passed
        assert report.parameter == "n"
        assert report.ks[0] == pytest.approx(1.0 - 10.0 * np.log1p(0.1), rel=1e-9)
        assert report.final < 0.01

    def test_mittag_leffler_towards_discrete_stable(self):
        report = domain_of_attraction_check(LTSpec.mittag_leffler(0.5), 0.5, [10, 100, 1000])
        assert report.passed

    def test_stable_law_is_its_own_limit(self):
        report = domain_of_attraction_check(LTSpec.positive_stable(0.5), 0.5, [2, 4, 8])
        np.testing.assert_allclose(report.ks, 0.0, atol=1e-14)

    def test_wrong_index_fails(self):
        report = domain_of_attraction_check(LTSpec.exponential(1.0), 0.5, [10, 100, 1000])
        assert not report.passed

    def test_n_list_must_increase(self):
        with pytest.raises(ValueError):
            domain_of_attraction_check(LTSpec.exponential(1.0), 1.0, [100, 10])


class TestSelfDecomposability:
    def test_poisson_is_self_decomposable(self):
        result = discrete_selfdecomposable_check(ProbSeq.poisson(2.0, 64))
        assert result.passed
        assert result.source == "pmf"
        assert len(result.c_grid) == 9

    def test_geometric_is_self_decomposable(self):
        assert discrete_selfdecomposable_check(ProbSeq.geometric(0.5, 64)).passed

    def test_binomial_is_not_self_decomposable(self):
        result = discrete_selfdecomposable_check(ProbSeq.binomial(2, 0.5, order=32))
        assert not result.passed
        assert result.worst_value < -1e-3

    def test_discrete_stable_closed_form(self):
        result = discrete_selfdecomposable_check(discrete_stable_pgf(DiscreteStableSpec(0.5, 1.0)))
        assert result.passed
        assert result.source == "closed-form"
        assert result.order == 64

    def test_mixed_discrete_stable_closed_form(self):
        pgf = mixed_discrete_stable_pgf(LTSpec.gamma(2.0, 1.0), alpha=0.5)
        assert discrete_selfdecomposable_check(pgf, c_grid=[0.25, 0.5, 0.75], order=48).passed

    def test_wrapped_probseq_uses_series_division(self):
        result = discrete_selfdecomposable_check(PGFSpec.from_probseq(ProbSeq.poisson(1.0, 40)))
        assert result.source == "pmf"

    def test_zero_at_origin(self):
        with pytest.raises(ZeroAtOrigin):
            discrete_selfdecomposable_check(ProbSeq.degenerate(1, 8))

    def test_c_grid_bounds(self):
        with pytest.raises(ValueError):
            discrete_selfdecomposable_check(ProbSeq.poisson(1.0, 16), c_grid=[0.5, 1.0])
