from abc import ABC, abstractmethod
from collections.abc import Sequence
from typing import override

import numpy as np

from pyfixpoint.core.element import (
    BoolArray,
    Element,
    FiniteIndex,
    FloatArray,
    Packed,
    Scalar,
    ensure_finite,
    make_rng,
    pack,
    same_points,
)
from pyfixpoint.expr import Expr, evaluate, evaluate_array, free_variables
from pyfixpoint.shared.settings import get_settings
from pyfixpoint.shared.types import DomainError, EvaluationError, TableValidationError


class PartialMetricSpace(ABC):
    """
    A carrier together with a partial metric p.

    Batched methods take packed numpy columns (see `core.element.pack`) and are
    what the certifiers use; `distance`, `induced_distance` and `self_distance`
    are the single-point forms.
    """

    label: str
    eps_ax: float

    @property
    @abstractmethod
    def is_finite(self) -> bool: ...

    @abstractmethod
    def contains(self, a: Element) -> bool: ...

    @abstractmethod
    def distances(self, a: Packed, b: Packed) -> FloatArray: ...

    @abstractmethod
    def _point_distance(self, a: Element, b: Element) -> float: ...

    @abstractmethod
    def same_points(self, a: Packed, b: Packed) -> BoolArray:
        """The identity rule: equal index, or scalars within eps_ax."""

    @abstractmethod
    def sample(self, k: int, seed: int) -> list[Element]: ...

    @abstractmethod
    def contains_array(self, a: Packed) -> BoolArray: ...

    def check_member(self, a: Element) -> Element:
        if not self.contains(a):
            raise DomainError(f"{a!r} is outside the carrier of {self.label}")
        return a

    def pack(self, elements: Sequence[Element]) -> Packed:
        for e in elements:
            _ = self.check_member(e)
        return pack(elements)

    def distance(self, a: Element, b: Element) -> float:
        _ = self.check_member(a), self.check_member(b)
        value = self._point_distance(a, b)
        if value < 0:
            raise EvaluationError(f"p({a}, {b}) = {value} is negative")
        return value

    def self_distance(self, a: Element) -> float:
        return self.distance(a, a)

    def induced_distance(self, a: Element, b: Element) -> float:
        """p^s(a, b) = 2 p(a, b) - p(a, a) - p(b, b)."""
        return 2 * self.distance(a, b) - self.distance(a, a) - self.distance(b, b)

    def self_distances(self, a: Packed) -> FloatArray:
        return self.distances(a, a)

    def induced_distances(self, a: Packed, b: Packed) -> FloatArray:
        return 2 * self.distances(a, b) - self.distances(a, a) - self.distances(b, b)

    def same_point(self, a: Element, b: Element) -> bool:
        return bool(self.same_points(pack([a]), pack([b]))[0])


class FiniteSpace(PartialMetricSpace):
    """n points with an explicit n×n distance table; p2 and p3 are checked on construction."""

    def __init__(self, table: Sequence[Sequence[float]] | FloatArray, label: str = "finite", eps_ax: float | None = None):
        matrix = np.array(table, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] == 0:
            raise DomainError(f"distance table must be a non-empty square matrix, got shape {matrix.shape}")
        _validate_table(matrix)
        matrix.setflags(write=False)
        self.table: FloatArray = matrix
        self.label = label
        self.eps_ax = get_settings().eps_ax if eps_ax is None else eps_ax

    @property
    def size(self) -> int:
        return self.table.shape[0]

    @property
    @override
    def is_finite(self) -> bool:
        return True

    def elements(self) -> list[Element]:
        return [FiniteIndex(i) for i in range(self.size)]

    @override
    def contains(self, a: Element) -> bool:
        return isinstance(a, FiniteIndex) and 0 <= a.index < self.size

    @override
    def contains_array(self, a: Packed) -> BoolArray:
        if not np.issubdtype(a.dtype, np.integer):
            return np.zeros(a.shape, dtype=np.bool_)
        return (a >= 0) & (a < self.size)

    @override
    def distances(self, a: Packed, b: Packed) -> FloatArray:
        return self.table[a, b]

    @override
    def _point_distance(self, a: Element, b: Element) -> float:
        return float(self.table[a.index, b.index])  # pyright: ignore[reportAttributeAccessIssue]

    @override
    def same_points(self, a: Packed, b: Packed) -> BoolArray:
        return same_points(a, b, self.eps_ax)

    @override
    def sample(self, k: int, seed: int) -> list[Element]:
        """Uniform indices; once k reaches n every index is present."""
        if k < 1:
            raise DomainError(f"sample count must be positive, got {k}")
        rng = make_rng(seed)
        if k >= self.size:
            picks = np.concatenate([rng.permutation(self.size), rng.integers(0, self.size, k - self.size)])
        else:
            picks = rng.choice(self.size, size=k, replace=False)
        return [FiniteIndex(int(i)) for i in picks]

    @override
    def __repr__(self) -> str:
        return f"FiniteSpace(label={self.label!r}, size={self.size})"


def _validate_table(matrix: FloatArray) -> None:
    def first(mask: BoolArray) -> tuple[int, int]:
        i, j = np.argwhere(mask)[0]
        return int(i), int(j)

    if not np.all(np.isfinite(matrix)):
        raise TableValidationError("distance table has a non-finite entry", first(~np.isfinite(matrix)))
    if np.any(matrix < 0):
        raise TableValidationError("distance table has a negative entry", first(matrix < 0))
    if np.any(asym := matrix != matrix.T):
        raise TableValidationError("distance table is not symmetric (p3)", first(np.triu(asym)))
    diagonal = np.diag(matrix)
    if np.any(p2 := diagonal[:, None] > matrix):
        raise TableValidationError("self distance exceeds a cross distance (p2)", first(p2))


class IntervalSpace(PartialMetricSpace):
    """
    Real points x >= lower with p given as an expression in x and y.

    `upper` bounds sampling only; the carrier itself is unbounded above.
    """

    def __init__(self, lower: float, upper: float, expr: Expr, label: str = "interval", eps_ax: float | None = None):
        if not (np.isfinite(lower) and np.isfinite(upper)) or upper <= lower:
            raise DomainError(f"sampling interval [{lower}, {upper}] is empty or unbounded")
        if extra := free_variables(expr) - {"x", "y"}:
            raise DomainError(f"distance expression may only use x and y, found {sorted(extra)}")
        self.lower: float = float(lower)
        self.upper: float = float(upper)
        self.expr: Expr = expr
        self.label = label
        self.eps_ax = get_settings().eps_ax if eps_ax is None else eps_ax

    @property
    @override
    def is_finite(self) -> bool:
        return False

    @override
    def contains(self, a: Element) -> bool:
        return isinstance(a, Scalar) and bool(np.isfinite(a.value)) and a.value >= self.lower - self.eps_ax

    @override
    def contains_array(self, a: Packed) -> BoolArray:
        if not np.issubdtype(a.dtype, np.floating):
            return np.zeros(a.shape, dtype=np.bool_)
        return np.isfinite(a) & (a >= self.lower - self.eps_ax)

    @override
    def distances(self, a: Packed, b: Packed) -> FloatArray:
        values = evaluate_array(self.expr, {"x": a.astype(np.float64), "y": b.astype(np.float64)})
        return ensure_finite(values, f"p = {self.expr}")

    @override
    def _point_distance(self, a: Element, b: Element) -> float:
        return evaluate(self.expr, {"x": a.value, "y": b.value})  # pyright: ignore[reportAttributeAccessIssue]

    @override
    def same_points(self, a: Packed, b: Packed) -> BoolArray:
        return same_points(a, b, self.eps_ax)

    @override
    def sample(self, k: int, seed: int) -> list[Element]:
        """Endpoints first, then 0 when it lies strictly inside, then uniform draws on [lower, upper]."""
        if k < 1:
            raise DomainError(f"sample count must be positive, got {k}")
        anchors = [self.lower, self.upper]
        if self.lower < 0 < self.upper:
            anchors.append(0.0)
        anchors = anchors[:k]
        draws = make_rng(seed).uniform(self.lower, self.upper, k - len(anchors))
        return [Scalar(float(v)) for v in (*anchors, *draws)]

    @override
    def __repr__(self) -> str:
        return f"IntervalSpace(label={self.label!r}, lower={self.lower}, upper={self.upper}, p={self.expr})"
