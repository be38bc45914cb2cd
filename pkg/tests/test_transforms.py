"""ラプラス変換と PGF の橋渡しのテスト."""
import numpy as np
import pytest
from scipy import stats

from src.core.transforms import (
    NegativeArgument,
    bernstein_probe,
    complete_monotonicity_probe,
    lt_candidate_from_pgf,
    lt_evaluate,
    lt_neg_log,
    mixed_discrete_stable_pgf,
    pgf_coefficients,
    pgf_from_lt,
    pgf_probseq,
    pgf_spec_from_lt,
)
from src.models import InvalidLTSpec, LTFamily, LTSpec, PGFSpec, ProbeVerdict, ProbSeq

GRID = np.linspace(0.05, 1.0, 20)


class TestLTSpec:
    def test_closed_forms(self):
        s = 0.7
        assert lt_evaluate(LTSpec.degenerate(2.0), s) == pytest.approx(np.exp(-1.4))
        assert lt_evaluate(LTSpec.exponential(2.0), s) == pytest.approx(2.0 / 2.7)
        assert lt_evaluate(LTSpec.gamma(2.0, 1.0), s) == pytest.approx((1.0 / 1.7) ** 2)
        assert lt_evaluate(LTSpec.positive_stable(0.5), s) == pytest.approx(np.exp(-np.sqrt(s)))
        assert lt_evaluate(LTSpec.mittag_leffler(0.5), s) == pytest.approx(1.0 / (1.0 + np.sqrt(s)))

    def test_value_at_zero_is_one(self):
        for phi in (
            LTSpec.degenerate(1.0),
            LTSpec.exponential(1.0),
            LTSpec.gamma(3.0, 2.0),
            LTSpec.positive_stable(0.3),
            LTSpec.mittag_leffler(0.7),
        ):
            assert lt_evaluate(phi, 0.0) == 1.0

    def test_negative_argument(self):
        with pytest.raises(NegativeArgument):
            lt_evaluate(LTSpec.exponential(1.0), -0.1)

    def test_invalid_parameters(self):
        with pytest.raises(InvalidLTSpec, match="shape must be > 0"):
            LTSpec.gamma(-1.0, 1.0)
        with pytest.raises(InvalidLTSpec, match="alpha"):
            LTSpec.positive_stable(1.5)
        with pytest.raises(InvalidLTSpec, match="Unknown parameter"):
            LTSpec(LTFamily.EXPONENTIAL, {"rate": 1.0, "shape": 2.0})

    def test_scaled(self):
        phi = LTSpec.gamma(2.0, 1.0).scaled(4.0)
        assert lt_evaluate(phi, 0.5) == pytest.approx(lt_evaluate(LTSpec.gamma(2.0, 1.0), 2.0))
        ml = LTSpec.mittag_leffler(0.5).scaled(4.0)
        assert lt_evaluate(ml, 1.0) == pytest.approx(1.0 / 3.0)

    def test_neg_log_matches_log(self):
        s = np.array([0.01, 0.1, 1.0, 10.0])
        for phi in (LTSpec.exponential(1.0), LTSpec.gamma(2.0, 3.0), LTSpec.mittag_leffler(0.4)):
            np.testing.assert_allclose(lt_neg_log(phi, s), -np.log(lt_evaluate(phi, s)), rtol=1e-9)

    def test_neg_log_keeps_precision_near_zero(self):
        assert lt_neg_log(LTSpec.exponential(1.0), 1e-12) == pytest.approx(1e-12, rel=1e-9)

    def test_dict_round_trip(self):
        phi = LTSpec.mittag_leffler(0.5, 2.0)
        assert LTSpec.from_dict(phi.to_dict()) == phi


class TestPgfFromLt:
    """Q(s) = φ(1 - s) の係数."""

    def test_exponential_gives_geometric_half(self):
        q = pgf_from_lt(LTSpec.exponential(1.0), 40)
        np.testing.assert_allclose(q.p, 0.5 ** (np.arange(41) + 1), atol=1e-12)

    def test_degenerate_gives_poisson(self):
        q = pgf_from_lt(LTSpec.degenerate(2.0), 30)
        np.testing.assert_allclose(q.p, stats.poisson(2.0).pmf(np.arange(31)), atol=1e-15)

    def test_gamma_gives_negative_binomial(self):
        q = pgf_from_lt(LTSpec.gamma(2.0, 1.0), 30)
        np.testing.assert_allclose(q.p, stats.nbinom(2.0, 0.5).pmf(np.arange(31)), atol=1e-15)

    def test_stable_with_alpha_one_is_poisson(self):
        q = pgf_from_lt(LTSpec.positive_stable(1.0), 30)
        np.testing.assert_allclose(q.p, stats.poisson(1.0).pmf(np.arange(31)), atol=1e-14)

    def test_mittag_leffler_with_alpha_one_is_geometric(self):
        q = pgf_from_lt(LTSpec.mittag_leffler(1.0), 30)
        np.testing.assert_allclose(q.p, 0.5 ** (np.arange(31) + 1), atol=1e-14)

    def test_heavy_tailed_coefficients_are_nonnegative(self):
        q = pgf_from_lt(LTSpec.mittag_leffler(0.5), 64)
        assert np.all(q.p >= 0)
        assert q.tail_bound > 0

    def test_order_must_be_positive(self):
        with pytest.raises(ValueError):
            pgf_from_lt(LTSpec.exponential(1.0), 0)


class TestClosedFormPGF:
    def test_contour_extraction_matches_series(self):
        coeffs = pgf_coefficients(pgf_spec_from_lt(LTSpec.gamma(2.0, 1.0)), 40)
        np.testing.assert_allclose(coeffs.coeffs, stats.nbinom(2.0, 0.5).pmf(np.arange(41)), atol=1e-11)

    def test_contour_extraction_of_mittag_leffler(self):
        closed = pgf_probseq(pgf_spec_from_lt(LTSpec.mittag_leffler(0.5)), 48)
        series = pgf_from_lt(LTSpec.mittag_leffler(0.5), 48)
        np.testing.assert_allclose(closed.p, series.p, atol=1e-11)

    def test_mixed_discrete_stable(self):
        pgf = mixed_discrete_stable_pgf(LTSpec.degenerate(1.0), alpha=0.5, lam=2.0)
        s = np.array([0.0, 0.3, 0.9])
        np.testing.assert_allclose(pgf.evaluate(s), np.exp(-2.0 * np.sqrt(1.0 - s)), rtol=1e-14)

    def test_probseq_passes_through(self):
        q = ProbSeq.poisson(1.0, 10)
        assert pgf_probseq(PGFSpec.from_probseq(q), 10) is q


class TestProbes:
    def test_exponential_is_completely_monotone(self):
        result = complete_monotonicity_probe(lambda s: np.exp(-s), GRID)
        assert result.verdict is ProbeVerdict.PASS
        assert result.depth == 6

    def test_gaussian_kernel_is_not_completely_monotone(self):
        result = complete_monotonicity_probe(lambda s: np.exp(-(s**2)), GRID)
        assert result.verdict is ProbeVerdict.FAIL
        assert result.failed_order == 2

    def test_poisson_candidate_passes(self):
        table = lt_candidate_from_pgf(PGFSpec.from_probseq(ProbSeq.poisson(2.0, 64)), GRID)
        assert table.verdict is ProbeVerdict.PASS
        np.testing.assert_allclose(table.values, np.exp(-2.0 * GRID), atol=1e-14)

    def test_binomial_candidate_fails(self):
        table = lt_candidate_from_pgf(PGFSpec.from_probseq(ProbSeq.binomial(2, 0.5)), GRID)
        assert table.verdict is ProbeVerdict.FAIL

    def test_mittag_leffler_exponent_is_bernstein(self):
        result = bernstein_probe(lambda s: 1.0 / (1.0 + np.sqrt(s)), GRID)
        assert result.verdict is ProbeVerdict.PASS

    def test_squared_exponent_is_not_bernstein(self):
        result = bernstein_probe(lambda s: np.exp(-(s**2)), GRID)
        assert result.verdict is ProbeVerdict.FAIL
        assert result.failed_order == 2

    def test_grid_must_be_increasing(self):
        with pytest.raises(ValueError):
            complete_monotonicity_probe(lambda s: np.exp(-s), [0.5, 0.2])
