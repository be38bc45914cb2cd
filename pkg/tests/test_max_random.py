"""幾何・φ-MID ランダム最大値のテスト."""
from fractions import Fraction

import numpy as np
import pytest
from scipy import stats

from src.core.max_random import (
    DomainError,
    example2_report,
    geo_extreme_stability_check,
    lattice_dtype_pair,
    lattice_table,
    phi_mid_cdf,
    phi_mid_df,
    transfer_max_simulate,
)
from src.models import (
    InvalidSpec,
    LatticeDF,
    LTSpec,
    MaxBase,
    MaxBaseFamily,
    MaxCaseFamily,
    MaxStabilityCase,
    MIDTarget,
)


class TestExample2:
    """q = 1/4, c = 1/2 の幾何分布の対."""

    def test_exact_rows(self):
        report = example2_report()
        first, last = report.rows[0], report.rows[-1]
        assert (first.q_x, first.q_y) == (Fraction(3, 4), Fraction(1, 2))
        assert (first.q_x_thinned, first.q_y_thinned) == (Fraction(6, 7), Fraction(2, 3))
        assert last.s == 1
        assert {last.q_x, last.q_y, last.q_x_thinned, last.q_y_thinned} == {Fraction(1)}

    def test_not_a_dtype_pair(self):
        report = example2_report()
        assert report.deviation_at_zero == Fraction(1, 12)
        assert report.not_equivalent
        assert report.to_dict()["deviation_at_zero"] == "1/12"


class TestLatticeTables:
    def test_lattice_pair(self):
        f, g = lattice_dtype_pair(LTSpec.degenerate(np.log(4.0)), 0.5, 8)
        k = np.arange(9)
        np.testing.assert_allclose(f, 1.0 - 4.0 ** (-k), atol=1e-15)
        np.testing.assert_allclose(g, 1.0 - 2.0 ** (-k), atol=1e-15)
        assert f[0] == g[0] == 0.0

    def test_table_is_a_distribution_function(self):
        table = lattice_table(LatticeDF(LTSpec.mittag_leffler(0.5)), 50)
        assert table[0] == 0.0
        assert np.all(np.diff(table) > 0)
        assert table[-1] < 1.0

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            lattice_table(LatticeDF(LTSpec.exponential(1.0)), -1)
        with pytest.raises(InvalidSpec):
            LatticeDF(LTSpec.exponential(1.0), 0.0)


class TestGeometricExtremes:
    def test_pareto_min_is_stable(self):
        report = geo_extreme_stability_check(
            MaxStabilityCase(MaxCaseFamily.PARETO_MIN, 0.1, a=2.0), samples=100_000, seed=42
        )
        assert report.ks[0] < 0.02
        assert report.identity_deviation < 1e-12
        assert report.passed

    def test_logistic_max_is_stable(self):
        report = geo_extreme_stability_check(
            MaxStabilityCase(MaxCaseFamily.LOGISTIC_MAX, 0.2), samples=100_000, seed=42
        )
        assert report.ks[0] < 0.02
        assert report.identity_deviation < 1e-12
        assert report.passed

    def test_exponential_min_is_not(self):
        report = geo_extreme_stability_check(
            MaxStabilityCase(MaxCaseFamily.EXPONENTIAL_GEO_MIN, 0.5), samples=100_000, seed=42
        )
        assert report.ks[0] > 0.1
        assert report.identity_deviation > 0.1
        assert not report.passed

    def test_case_validation(self):
        with pytest.raises(InvalidSpec):
            MaxStabilityCase(MaxCaseFamily.PARETO_MIN, 0.1)
        with pytest.raises(InvalidSpec):
            MaxStabilityCase(MaxCaseFamily.LOGISTIC_MAX, 1.0)
        with pytest.raises(ValueError):
            MaxStabilityCase("weibull-max", 0.5)  # type: ignore[arg-type]


class TestPhiMid:
    @pytest.mark.parametrize("x", [-3.0, -0.5, 0.0, 1.0, 4.0])
    def test_geometric_mixing_gives_logistic(self, x):
        assert phi_mid_df(LTSpec.exponential(1.0), MIDTarget.gumbel(), x) == pytest.approx(
            1.0 / (1.0 + np.exp(-x)), rel=1e-12
        )

    @pytest.mark.parametrize("x", [0.5, 1.0, 3.0])
    def test_degenerate_mixing_is_identity(self, x):
        target = MIDTarget.frechet(2.0)
        assert phi_mid_df(LTSpec.degenerate(1.0), target, x) == pytest.approx(np.exp(-(x**-2.0)), rel=1e-12)

    def test_gamma_mixing_with_frechet(self):
        # (1/(1 + 1/x))^2
        assert phi_mid_df(LTSpec.gamma(2.0, 1.0), MIDTarget.frechet(1.0), 2.0) == pytest.approx(4.0 / 9.0)

    def test_outside_support(self):
        with pytest.raises(DomainError):
            phi_mid_df(LTSpec.exponential(1.0), MIDTarget.frechet(2.0), 0.0)
        with pytest.raises(DomainError):
            phi_mid_df(LTSpec.exponential(1.0), MIDTarget.gumbel(), float("nan"))

    def test_vectorised_cdf(self):
        cdf = phi_mid_cdf(LTSpec.exponential(1.0), MIDTarget.frechet(1.0))
        x = np.array([-np.inf, -1.0, 0.0, 1.0, 3.0])
        np.testing.assert_allclose(cdf(x), [0.0, 0.0, 0.0, 0.5, 0.75], atol=1e-15)

    def test_logistic_cdf_matches_scipy(self):
        cdf = phi_mid_cdf(LTSpec.exponential(1.0), MIDTarget.gumbel())
        x = np.linspace(-5.0, 5.0, 11)
        np.testing.assert_allclose(cdf(x), stats.logistic.cdf(x), rtol=1e-12)


class TestTransferMax:
    @pytest.mark.parametrize(
        ("phi", "base"),
        [
            (LTSpec.exponential(1.0), MaxBase(MaxBaseFamily.EXPONENTIAL)),
            (LTSpec.degenerate(1.0), MaxBase(MaxBaseFamily.PARETO, 2.0)),
            (LTSpec.gamma(2.0, 1.0), MaxBase(MaxBaseFamily.PARETO, 1.0)),
        ],
        ids=["logistic", "frechet", "gamma-frechet"],
    )
    def test_convergence(self, phi, base):
        report = transfer_max_simulate(phi, base, samples=100_000, seed=42)
        assert report.theta == [0.5, 0.1, 0.02, 0.004]
        assert report.final < 0.03

    def test_pareto_base_needs_index(self):
        with pytest.raises(InvalidSpec):
            MaxBase(MaxBaseFamily.PARETO)
