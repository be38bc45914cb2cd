"""乱数生成・経験分布モジュール."""
from .diagnostics import (
    EmptySample,
    discrete_ks_distance,
    empirical_lt,
    empirical_pgf,
    is_nonincreasing,
    ks_distance,
    write_samples_csv,
)
from .generators import (
    SamplerError,
    UnsupportedMixingSampler,
    draw_discrete_stable,
    draw_from_pmf,
    draw_lt_variates,
    draw_mittag_leffler,
    draw_poisson,
    draw_positive_stable,
    sample_discrete_stable,
    sample_exponential_mixture,
    sample_mittag_leffler,
    sample_positive_stable,
    sample_thinned,
    sum_iid,
)
from .streams import map_streams

__all__ = [
    "sample_positive_stable",
    "sample_mittag_leffler",
    "sample_discrete_stable",
    "sample_exponential_mixture",
    "sample_thinned",
    "draw_positive_stable",
    "draw_mittag_leffler",
    "draw_discrete_stable",
    "draw_lt_variates",
    "draw_poisson",
    "draw_from_pmf",
    "sum_iid",
    "ks_distance",
    "discrete_ks_distance",
    "is_nonincreasing",
    "empirical_lt",
    "empirical_pgf",
    "write_samples_csv",
    "map_streams",
    "SamplerError",
    "UnsupportedMixingSampler",
    "EmptySample",
]
