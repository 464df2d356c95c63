"""Weighted-EF1 + fractionally-Pareto-optimal chore allocation.

Thin wrapper over the C++ core. All rationals cross the boundary exactly,
as Python ints or "p/q" strings.
"""

from ._core import (
    BudgetExceededError,
    Instance,
    UnsupportedInstanceError,
    ValidationError,
    check_mpb_certificate,
    check_wef1,
    check_wpef1,
    classify,
    exhaustive_wef1_po_set,
    instance_hash,
    is_fractionally_dominated,
    is_integrally_dominated,
    random_instance,
    solve_three_agent_types,
    solve_two_chore_types,
    wps,
)

__all__ = [
    "BudgetExceededError",
    "Instance",
    "UnsupportedInstanceError",
    "ValidationError",
    "check_mpb_certificate",
    "check_wef1",
    "check_wpef1",
    "classify",
    "exhaustive_wef1_po_set",
    "instance_hash",
    "is_fractionally_dominated",
    "is_integrally_dominated",
    "random_instance",
    "solve_three_agent_types",
    "solve_two_chore_types",
    "wps",
]
