"""ランダム最大値モジュール."""
from .geometric import geo_extreme_stability_check
from .lattice import example2_report, lattice_dtype_pair, lattice_table
from .mid import (
    DomainError,
    MaxRandomError,
    UnsupportedBase,
    phi_mid_cdf,
    phi_mid_df,
    transfer_max_simulate,
)

__all__ = [
    "example2_report",
    "lattice_dtype_pair",
    "lattice_table",
    "geo_extreme_stability_check",
    "phi_mid_df",
    "phi_mid_cdf",
    "transfer_max_simulate",
    "MaxRandomError",
    "DomainError",
    "UnsupportedBase",
]
