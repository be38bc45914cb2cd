"""ラプラス変換モジュール."""
from .laplace import (
    CoefficientExtractionFailure,
    NegativeArgument,
    TransformError,
    lt_evaluate,
    lt_function,
    lt_neg_log,
    mixed_discrete_stable_pgf,
    pgf_coefficients,
    pgf_from_lt,
    pgf_probseq,
    pgf_spec_from_lt,
    stable_base_series,
)
from .monotonicity import bernstein_probe, complete_monotonicity_probe, lt_candidate_from_pgf

__all__ = [
    "lt_evaluate",
    "lt_function",
    "lt_neg_log",
    "pgf_from_lt",
    "pgf_spec_from_lt",
    "mixed_discrete_stable_pgf",
    "pgf_coefficients",
    "pgf_probseq",
    "stable_base_series",
    "lt_candidate_from_pgf",
    "complete_monotonicity_probe",
    "bernstein_probe",
    "TransformError",
    "NegativeArgument",
    "CoefficientExtractionFailure",
]
