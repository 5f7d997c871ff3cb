"""Exact max-plus two-sided linear systems and their min-plus linear closure."""

from ._core import (
    Error,
    ParseError,
    PipelineError,
    SolverError,
    alternating,
    alternating_separated,
    compute_closure,
    enumerate_solutions,
    in_r,
    is_solution,
    is_stable,
    k_set,
    m_set,
    minplus_membership,
    parse_matrix,
    phi,
    phi0,
    verify_closure,
)

__all__ = [
    "Error",
    "ParseError",
    "PipelineError",
    "SolverError",
    "alternating",
    "alternating_separated",
    "compute_closure",
    "enumerate_solutions",
    "in_r",
    "is_solution",
    "is_stable",
    "k_set",
    "m_set",
    "minplus_membership",
    "parse_matrix",
    "phi",
    "phi0",
    "verify_closure",
]
