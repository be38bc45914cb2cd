"""無限分解可能性判定モジュール."""
from .decompose import (
    DivisibilityError,
    NotApplicable,
    ZeroAtOrigin,
    compound_poisson_decompose,
    has_finite_support,
    nth_root_component,
    poisson_as_compound_bernoulli,
    rebuild_from_decomposition,
    recombination_error,
    support_profile,
    theorem1a_support_check,
)
from .examples import ExampleKind, make_example_law

__all__ = [
    "compound_poisson_decompose",
    "rebuild_from_decomposition",
    "recombination_error",
    "poisson_as_compound_bernoulli",
    "nth_root_component",
    "support_profile",
    "has_finite_support",
    "theorem1a_support_check",
    "make_example_law",
    "ExampleKind",
    "DivisibilityError",
    "ZeroAtOrigin",
    "NotApplicable",
]
