"""D型・離散安定則モジュール."""
from .selfdecomposable import discrete_selfdecomposable_check
from .stable import (
    discrete_stable_pgf,
    discrete_stable_pmf,
    domain_of_attraction_check,
    stability_identity_check,
)
from .thinning import bernoulli_series, same_dtype, thin, thin_series

__all__ = [
    "thin",
    "thin_series",
    "bernoulli_series",
    "same_dtype",
    "discrete_stable_pgf",
    "discrete_stable_pmf",
    "stability_identity_check",
    "domain_of_attraction_check",
    "discrete_selfdecomposable_check",
]
