from .oracles import (
    principal_root_oracle,
    line_tau_oracle,
    nu_oracle,
    sympy_reduced_basis,
    linear_membership,
)
from .acceptance import (
    CHECKS,
    AcceptanceEntry,
    AcceptanceResult,
    SuiteReport,
    load_entries,
    rational_grid,
    run_entry,
    run_suite,
)

__all__ = [
    "principal_root_oracle",
    "line_tau_oracle",
    "nu_oracle",
    "sympy_reduced_basis",
    "linear_membership",
    "CHECKS",
    "AcceptanceEntry",
    "AcceptanceResult",
    "SuiteReport",
    "load_entries",
    "rational_grid",
    "run_entry",
    "run_suite",
]
