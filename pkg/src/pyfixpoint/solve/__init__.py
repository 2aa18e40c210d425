from pyfixpoint.solve.diagnostics import (
    convergence_check,
    descent_check,
    diagnose,
    first_confined_step,
    limit_index,
    order_limit_check,
    orbit_confinement_check,
)
from pyfixpoint.solve.multistart import StartOutcome, distinct_fixed_points, solve_many, uniqueness_cross_check
from pyfixpoint.solve.picard import FixedPointCheck, picard_solve, verify_fixed_point
from pyfixpoint.solve.trace import IterationTrace, SolveResult

__all__ = [
    "FixedPointCheck",
    "IterationTrace",
    "SolveResult",
    "StartOutcome",
    "convergence_check",
    "descent_check",
    "diagnose",
    "distinct_fixed_points",
    "first_confined_step",
    "limit_index",
    "orbit_confinement_check",
    "order_limit_check",
    "picard_solve",
    "solve_many",
    "uniqueness_cross_check",
    "verify_fixed_point",
]
