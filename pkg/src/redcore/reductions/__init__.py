"""Minimal reductions, reduction numbers, the core and balancedness."""

from .balance import (
    CONSISTENT,
    COUNTEREXAMPLE,
    INCONSISTENT,
    OUT_OF_HYPOTHESIS,
    SUPPRESSED,
    balanced_test,
    min_balanced_index,
)
from .colon import cancellation_check, colon_power, decreasing_chain_check
from .core import core, core_oracle_mc, ideal_height, min_power_in_core
from .sampling import estimate_r, random_minimal_reduction, reduction_number, sample_reductions
from .types import BalanceReport, BalanceVerdict, CoreResult, Options, ReductionSample

__all__ = [
    "BalanceReport", "BalanceVerdict", "CONSISTENT", "COUNTEREXAMPLE", "CoreResult", "INCONSISTENT",
    "OUT_OF_HYPOTHESIS", "Options", "ReductionSample", "SUPPRESSED", "balanced_test",
    "cancellation_check", "colon_power", "core", "core_oracle_mc", "decreasing_chain_check",
    "estimate_r", "ideal_height", "min_balanced_index", "min_power_in_core",
    "random_minimal_reduction", "reduction_number", "sample_reductions",
]
