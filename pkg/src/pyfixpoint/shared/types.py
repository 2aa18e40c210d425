from collections.abc import Mapping
from enum import StrEnum, auto

import numpy as np
from numpy.typing import NDArray

type Env = Mapping[str, float]
type ArrayEnv = Mapping[str, NDArray[np.float64]]
type Witness = tuple[int, int]


class PyfixpointError(Exception):
    pass


class ExprError(PyfixpointError):
    pass


class ExprSyntaxError(ExprError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset: int = offset


class UnknownIdentifierError(ExprSyntaxError):
    def __init__(self, name: str, offset: int):
        super().__init__(f"unknown identifier {name!r}", offset)
        self.name: str = name


class EvaluationError(ExprError):
    pass


class UnboundVariableError(EvaluationError):
    def __init__(self, name: str):
        super().__init__(f"variable {name!r} is not bound")
        self.name: str = name


class DivisionByZeroError(EvaluationError):
    pass


class NonFiniteError(EvaluationError):
    pass


class DomainError(PyfixpointError, ValueError):
    pass


class TableValidationError(DomainError):
    """A finite table broke an eagerly checked axiom; `witness` is the offending (i, j)."""

    def __init__(self, message: str, witness: Witness):
        super().__init__(f"{message} at {witness}")
        self.witness: Witness = witness


class HypothesisError(PyfixpointError):
    pass


class UnknownNameError(PyfixpointError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class InstanceLoadError(PyfixpointError):
    pass


class Relation(StrEnum):
    LEQ = auto()
    GEQ = auto()
    EQ = auto()


class CheckStatus(StrEnum):
    PASS = auto()
    FAIL = auto()
    SKIPPED = auto()


class SolveStatus(StrEnum):
    CONVERGED = auto()
    MAX_ITER_EXCEEDED = auto()
    FIXED_POINT_HIT = auto()
    DESCENT_VIOLATION = auto()
    STALLED = auto()
