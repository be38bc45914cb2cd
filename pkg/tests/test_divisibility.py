"""無限分解可能性判定のテスト."""
import numpy as np
import pytest

from src.core.divisibility import (
    ExampleKind,
    NotApplicable,
    ZeroAtOrigin,
    compound_poisson_decompose,
    make_example_law,
    nth_root_component,
    poisson_as_compound_bernoulli,
    rebuild_from_decomposition,
    recombination_error,
    support_profile,
    theorem1a_support_check,
)
from src.models import InvalidPmf, ProbSeq, Verdict

ORDER = 64


class TestZeroAtOrigin:
    def test_random_laws_without_mass_at_zero(self):
        rng = np.random.default_rng(20240601)
        for _ in range(200):
            weights = rng.dirichlet(np.ones(32))
            q = ProbSeq.from_values(np.concatenate(([0.0], weights)))
            d = compound_poisson_decompose(q)
            assert d.verdict is Verdict.NOT_ID_ZERO_AT_ORIGIN
            assert d.verdict.is_not_id

    def test_shifted_example_law(self):
        q = make_example_law(ExampleKind.EX1B, p=0.5, k=3, t=2.0, order=ORDER)
        assert compound_poisson_decompose(q).verdict is Verdict.NOT_ID_ZERO_AT_ORIGIN

    def test_root_component_needs_mass_at_zero(self):
        q = make_example_law(ExampleKind.EX1B, p=0.5, k=2, t=1.0, order=20)
        with pytest.raises(ZeroAtOrigin):
            nth_root_component(q, 2)


class TestFiniteSupport:
    """二項分布は ID でなく、複合分布の係数 a_2 が負."""

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    @pytest.mark.parametrize("p", [0.1, 0.3, 0.5, 0.7, 0.9])
    def test_binomial_is_not_id(self, n, p):
        d = compound_poisson_decompose(ProbSeq.binomial(n, p))
        assert d.verdict is Verdict.NOT_ID_FINITE_SUPPORT
        assert d.witness_index == 2
        assert d.witness_value < 0

    def test_binomial_two_half_witness(self):
        # 2·log(1 + s) - 2·log 2 の s^2 の係数は -1
        d = compound_poisson_decompose(ProbSeq.binomial(2, 0.5))
        assert d.witness_index == 2
        assert d.witness_value == pytest.approx(-1.0, abs=1e-14)
        assert d.rate is None and d.compounding is None

    def test_random_three_point_laws(self):
        rng = np.random.default_rng(20240602)
        for _ in range(100):
            points = np.concatenate(([0], rng.choice(np.arange(1, 11), size=2, replace=False)))
            values = np.zeros(11)
            values[points] = rng.dirichlet(np.ones(3))
            q = ProbSeq.from_values(values).padded(ORDER)
            assert compound_poisson_decompose(q).verdict is Verdict.NOT_ID_FINITE_SUPPORT

    def test_finite_support_wins_over_log_overflow(self):
        # log(1e-12 + (1 - 1e-12)s) の係数は 1e12 倍ずつ増えて溢れる
        q = ProbSeq.from_values([1e-12, 1.0 - 1e-12]).padded(ORDER)
        d = compound_poisson_decompose(q)
        assert d.verdict is Verdict.NOT_ID_FINITE_SUPPORT
        assert d.rate is None

    def test_point_mass_at_zero_is_trivially_id(self):
        d = compound_poisson_decompose(ProbSeq.degenerate(0, 8))
        assert d.is_id
        assert d.rate == 0.0

    def test_rejects_non_probseq(self):
        with pytest.raises(InvalidPmf):
            compound_poisson_decompose([0.5, 0.5])  # type: ignore[arg-type]


def _id_laws():
    for lam in (0.5, 2.0, 5.0):
        yield f"poisson-{lam}", ProbSeq.poisson(lam, ORDER)
    for p in (0.3, 0.5, 0.8):
        yield f"geometric-{p}", ProbSeq.geometric(p, ORDER)
    for t in (0.5, 2.0, 4.5):
        for p in (0.3, 0.5, 0.7):
            yield f"negbinom-{t}-{p}", ProbSeq.negative_binomial(t, p, ORDER)
    for p in (0.3, 0.5, 0.7):
        for k in (2, 3, 4):
            for t in (0.5, 1.0, 2.0):
                yield f"ex1a-{p}-{k}-{t}", make_example_law(ExampleKind.EX1A, p, k, t, ORDER)


ID_LAWS = list(_id_laws())


class TestCompoundPoissonRoundTrip:
    @pytest.mark.parametrize("q", [law for _, law in ID_LAWS], ids=[name for name, _ in ID_LAWS])
    def test_id_and_recombines(self, q):
        d = compound_poisson_decompose(q)
        assert d.verdict is Verdict.ID
        assert d.rate == pytest.approx(-np.log(q.p0), rel=1e-12)
        assert d.compounding is not None and d.compounding.p0 == 0.0
        assert recombination_error(q, d) < 1e-9

    def test_poisson_compounding_is_point_mass_at_one(self):
        d = compound_poisson_decompose(ProbSeq.poisson(2.0, ORDER))
        assert d.rate == pytest.approx(2.0, abs=1e-12)
        assert d.compounding.p[1] == pytest.approx(1.0, abs=1e-12)
        assert d.margin > -1e-12

    def test_geometric_compounding_is_logarithmic(self):
        # -log(1 - qs) / (-log p) の係数 q^k / (k λ)
        p = 0.5
        d = compound_poisson_decompose(ProbSeq.geometric(p, 30))
        k = np.arange(1, 11)
        expected = (1 - p) ** k / k / -np.log(p)
        np.testing.assert_allclose(d.compounding.p[1:11], expected, atol=1e-13)

    def test_rebuild_rejects_non_id(self):
        d = compound_poisson_decompose(ProbSeq.binomial(2, 0.5))
        with pytest.raises(NotApplicable):
            rebuild_from_decomposition(d, 8)

    def test_poisson_as_compound_bernoulli(self):
        assert poisson_as_compound_bernoulli(2.0, 0.5, 40) < 1e-12

    def test_poisson_as_compound_bernoulli_rejects_b(self):
        with pytest.raises(ValueError):
            poisson_as_compound_bernoulli(2.0, 1.0, 10)


class TestGappedSupport:
    @pytest.mark.parametrize("k", [2, 3, 5])
    def test_example_law_gaps(self, k):
        q = make_example_law(ExampleKind.EX1A, p=0.5, k=k, t=1.5, order=ORDER)
        assert compound_poisson_decompose(q).is_id
        profile = support_profile(q, 1e-12)
        assert profile.has_gaps
        assert set(profile.gap_lengths) == {k - 1}
        assert all(i % k == 0 for i in profile.support_indices)

    def test_poisson_has_no_gaps(self):
        profile = support_profile(ProbSeq.poisson(2.0, 30), 1e-12)
        assert not profile.has_gaps
        assert not profile.finite

    def test_binomial_support_is_finite(self):
        assert support_profile(ProbSeq.binomial(4, 0.5), 1e-12).finite


class TestRootComponent:
    def test_poisson_square_root(self):
        root = nth_root_component(ProbSeq.poisson(2.0, 30), 2)
        assert root.exists
        np.testing.assert_allclose(root.component.p, ProbSeq.poisson(1.0, 30).p, atol=1e-14)

    def test_geometric_cube_root_is_negative_binomial(self):
        root = nth_root_component(ProbSeq.geometric(0.5, 40), 3)
        assert root.exists
        expected = ProbSeq.negative_binomial(1.0 / 3.0, 0.5, 40)
        np.testing.assert_allclose(root.component.p, expected.p, atol=1e-10)

    @pytest.mark.parametrize(
        "q, n",
        [(ProbSeq.geometric(0.5, 30), 4), (ProbSeq.poisson(2.0, 30), 2)],
        ids=["geometric", "poisson"],
    )
    def test_full_support_coincides(self, q, n):
        check = theorem1a_support_check(q, n)
        assert check.coincide
        assert check.input_support == tuple(range(check.window + 1))

    def test_binomial_cube_root_has_negative_coefficient(self):
        # ((1 + s)/2)^{2/3} の s^2 の係数は -1/9 · 2^{-2/3}
        root = nth_root_component(ProbSeq.binomial(2, 0.5), 3)
        assert not root.exists
        assert root.witness_index == 2
        assert root.witness_value == pytest.approx(-(2.0 ** (-2.0 / 3.0)) / 9.0, rel=1e-12)

    def test_support_coincides_with_root_component(self):
        q = make_example_law(ExampleKind.EX1A, p=0.5, k=3, t=1.0, order=60)
        check = theorem1a_support_check(q, 2)
        assert check.coincide
        assert check.window == 60
        assert check.input_support == tuple(range(0, 61, 3))

    def test_support_check_needs_id_law(self):
        with pytest.raises(NotApplicable):
            theorem1a_support_check(ProbSeq.binomial(3, 0.5), 2)

    def test_n_must_be_at_least_two(self):
        with pytest.raises(ValueError):
            nth_root_component(ProbSeq.poisson(1.0, 10), 1)
