from enum import IntEnum, StrEnum, auto
from typing import Final

APP_NAME: Final[str] = "pyfixpoint"
AUTHOR: Final[str] = "pyfixpoint"

ENV_PREFIX: Final[str] = "PYFIXPOINT_"

# The only names an expression may mention.
VARIABLES: Final[frozenset[str]] = frozenset({"x", "y", "t"})
BINARY_FUNCTIONS: Final[frozenset[str]] = frozenset({"min", "max"})
UNARY_FUNCTIONS: Final[frozenset[str]] = frozenset({"abs"})

# Near-zero points every control-function grid starts with.
NEAR_ZERO_PROBES: Final[tuple[float, ...]] = (1e-12, 1e-9, 1e-6, 1e-3)

TRACE_PREVIEW_ROWS: Final[int] = 10
REPORT_FLOAT_FORMAT: Final[str] = ".17g"


class ExitCode(IntEnum):
    OK = 0
    VIOLATION = 1
    USAGE = 2
    NON_CONVERGENCE = 3


class CheckName(StrEnum):
    P1 = "partial_metric.p1"
    P2 = "partial_metric.p2"
    P3 = "partial_metric.p3"
    P4 = "partial_metric.p4"
    INDUCED_ZERO_SELF = "induced_metric.zero_self"
    INDUCED_SYMMETRY = "induced_metric.symmetry"
    INDUCED_TRIANGLE = "induced_metric.triangle"
    INDUCED_SEPARATION = "induced_metric.separation"
    ORDER_REFLEXIVE = "order.reflexive"
    ORDER_ANTISYMMETRIC = "order.antisymmetric"
    ORDER_TRANSITIVE = "order.transitive"
    PSI_ZERO = "psi.zero_at_origin"
    PSI_POSITIVE = "psi.positive"
    PSI_NONDECREASING = "psi.nondecreasing"
    PSI_GROWTH = "psi.growth_probe"
    PSI_CONTINUITY = "psi.continuity"
    MAP_IN_CARRIER = "map.in_carrier"
    MAP_MONOTONE = "map.monotone"
    WEAK_CONTRACTION = "weak_contraction"
    BANACH = "banach"
    COMPARABILITY = "comparability"
    START_BELOW_IMAGE = "start_below_image"
    CONTINUITY_P = "continuity.p_convergence"
    CONTINUITY_PROPER = "continuity.proper_convergence"
    DESCENT = "solve.descent"
    DESCENT_MONOTONE = "solve.rho_nonincreasing"
    ORBIT_CONFINEMENT = "solve.orbit_confinement"
    ORDER_CHAIN = "solve.orbit_nondecreasing"
    ORDER_LIMIT = "solve.orbit_below_limit"
    CONVERGENCE_PLAIN = "solve.convergence"
    CONVERGENCE_PROPER = "solve.proper_convergence"
    CAUCHY_P = "solve.cauchy_p"
    CAUCHY_INDUCED = "solve.cauchy_induced"
    UNIQUENESS = "solve.uniqueness"


# Uniqueness checks. Failing one leaves the existence verdict untouched.
UNIQUENESS_CHECKS: Final[frozenset[CheckName]] = frozenset({CheckName.COMPARABILITY, CheckName.UNIQUENESS})


class Mutation(StrEnum):
    COMPARABILITY = auto()
    PSI_POSITIVITY = auto()
    MONOTONICITY = auto()
