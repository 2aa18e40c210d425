from collections.abc import Sequence
from dataclasses import dataclass
from typing import Final, override

import numpy as np
from numpy.typing import NDArray

from pyfixpoint.shared.types import DomainError, EvaluationError

type FloatArray = NDArray[np.float64]
type BoolArray = NDArray[np.bool_]
type Packed = NDArray[np.int64] | NDArray[np.float64]

_SEED_MASK: Final[int] = (1 << 64) - 1


@dataclass(frozen=True, slots=True, order=True)
class FiniteIndex:
    """A point of a finite carrier, named by its row in the distance table."""
    index: int

    @override
    def __str__(self) -> str:
        return str(self.index)


@dataclass(frozen=True, slots=True, order=True)
class Scalar:
    """A point of an interval carrier."""
    value: float

    @override
    def __str__(self) -> str:
        return repr(self.value)


type Element = FiniteIndex | Scalar


class BatchEvaluationError(EvaluationError):
    """A vectorised evaluation failed; `index` is the first offending position of the batch."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index: int = index


def element_key(e: Element) -> tuple[int, float]:
    """Total sort key used to order witnesses deterministically."""
    match e:
        case FiniteIndex(index):
            return 0, float(index)
        case Scalar(value):
            return 1, value


def pack(elements: Sequence[Element]) -> Packed:
    """Elements of one kind as a numpy column: int64 indices or float64 values."""
    if all(isinstance(e, FiniteIndex) for e in elements):
        return np.array([e.index for e in elements], dtype=np.int64)  # pyright: ignore[reportAttributeAccessIssue]
    if all(isinstance(e, Scalar) for e in elements):
        return np.array([e.value for e in elements], dtype=np.float64)  # pyright: ignore[reportAttributeAccessIssue]
    raise DomainError("elements mix finite indices and scalars")


def unpack(column: Packed) -> list[Element]:
    if np.issubdtype(column.dtype, np.integer):
        return [FiniteIndex(int(i)) for i in column]
    return [Scalar(float(v)) for v in column]


def element_at(column: Packed, i: int) -> Element:
    value = column[i]
    if np.issubdtype(column.dtype, np.integer):
        return FiniteIndex(int(value))
    return Scalar(float(value))


def ensure_finite(values: FloatArray, what: str) -> FloatArray:
    """Raise `BatchEvaluationError` at the first NaN of a vectorised evaluation."""
    bad = np.flatnonzero(np.isnan(values))
    if bad.size:
        raise BatchEvaluationError(f"evaluation of {what} failed", int(bad[0]))
    return values


def make_rng(seed: int, *salt: int) -> np.random.Generator:
    """
    Seeded generator; any 64-bit integer (negative included) is a valid seed.

    `salt` derives independent streams from one user seed.
    """
    if salt:
        return np.random.default_rng([seed & _SEED_MASK, *salt])
    return np.random.default_rng(seed & _SEED_MASK)


def same_points(a: Packed, b: Packed, eps_ax: float) -> BoolArray:
    """The identity rule: equal indices, or scalars at most eps_ax apart."""
    if np.issubdtype(a.dtype, np.integer):
        return a == b
    return np.abs(a - b) <= eps_ax
