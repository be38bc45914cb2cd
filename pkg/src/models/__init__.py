"""データモデル."""
from .divisibility import Decomposition, RootResult, SupportCheck, SupportProfile, Verdict
from .extremes import (
    DtypeMaxtypeComparison,
    LatticeDF,
    MaxBase,
    MaxBaseFamily,
    MaxCaseFamily,
    MaxStabilityCase,
    MIDTarget,
    MIDTargetFamily,
    PGFComparisonRow,
)
from .random_sums import Exponent, PhiIDSpec, PoissonExponent, PphiSpec, StableExponent
from .reports import ConvergenceReport, Provenance, Report, ReportVerdict, RunConfig, VERBS
from .sampling import GENERATOR_NAME, EmpiricalDist, SeededStream
from .series import InvalidPmf, InvalidSpec, ProbSeq, Series
from .stable import (
    DiscreteStableSpec,
    DtypeComparison,
    SelfDecomposabilityResult,
    ThinningParam,
)
from .transforms import (
    CandidateTable,
    InvalidLTSpec,
    LTFamily,
    LTSpec,
    PGFSpec,
    ProbeResult,
    ProbeVerdict,
)

__all__ = [
    # series
    "Series",
    "ProbSeq",
    "InvalidSpec",
    "InvalidPmf",
    # transforms
    "LTFamily",
    "LTSpec",
    "PGFSpec",
    "InvalidLTSpec",
    "ProbeVerdict",
    "ProbeResult",
    "CandidateTable",
    # divisibility
    "Verdict",
    "Decomposition",
    "SupportProfile",
    "RootResult",
    "SupportCheck",
    # stable
    "ThinningParam",
    "DiscreteStableSpec",
    "DtypeComparison",
    "SelfDecomposabilityResult",
    # random_sums
    "PphiSpec",
    "PhiIDSpec",
    "StableExponent",
    "PoissonExponent",
    "Exponent",
    # extremes
    "LatticeDF",
    "MaxCaseFamily",
    "MaxStabilityCase",
    "MIDTargetFamily",
    "MIDTarget",
    "MaxBaseFamily",
    "MaxBase",
    "PGFComparisonRow",
    "DtypeMaxtypeComparison",
    # sampling
    "GENERATOR_NAME",
    "SeededStream",
    "EmpiricalDist",
    # reports
    "ConvergenceReport",
    "Provenance",
    "Report",
    "ReportVerdict",
    "RunConfig",
    "VERBS",
]
