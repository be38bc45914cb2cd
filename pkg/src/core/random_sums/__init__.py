"""ランダム和モジュール."""
from src.core.samplers import UnsupportedMixingSampler

from .pphi import draw_pphi, lemma3_convergence, pphi_pgf, pphi_sample, theorem7_atom_check
from .targets import (
    LimitTarget,
    RandomSumError,
    UnsupportedOffDiagonal,
    UnsupportedSummand,
    limit_target,
)
from .transfer import (
    operator_phi_sum_simulate_2d,
    phi_id_lt,
    phi_id_probe,
    transfer_sum_simulate,
)

__all__ = [
    "pphi_pgf",
    "pphi_sample",
    "draw_pphi",
    "lemma3_convergence",
    "theorem7_atom_check",
    "phi_id_lt",
    "phi_id_probe",
    "transfer_sum_simulate",
    "operator_phi_sum_simulate_2d",
    "limit_target",
    "LimitTarget",
    "RandomSumError",
    "UnsupportedSummand",
    "UnsupportedOffDiagonal",
    "UnsupportedMixingSampler",
]
