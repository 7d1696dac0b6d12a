"""Complemented categories over finite rings, their orders and shift complexes."""

from ._ficat import (
    BudgetExceeded,
    FicatError,
    InvariantViolation,
    PreconditionError,
    check_axioms,
    compose,
    counts,
    factor,
    hom,
    hom_count,
    homology,
    module_dims,
    order_cmp,
    order_phi,
    ring_info,
    run_checks,
)

__all__ = [
    "BudgetExceeded",
    "FicatError",
    "InvariantViolation",
    "PreconditionError",
    "check_axioms",
    "compose",
    "counts",
    "factor",
    "hom",
    "hom_count",
    "homology",
    "module_dims",
    "order_cmp",
    "order_phi",
    "ring_info",
    "run_checks",
]
