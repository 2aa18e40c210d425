from abc import ABC, abstractmethod
from collections.abc import Sequence
from typing import override

import numpy as np

from pyfixpoint.core.element import BoolArray, Element, Packed, ensure_finite, pack
from pyfixpoint.expr import Expr, evaluate_array, free_variables
from pyfixpoint.shared.settings import get_settings
from pyfixpoint.shared.types import DomainError, Relation, TableValidationError


class PartialOrder(ABC):
    """The relation <=_X, evaluated pointwise or over packed columns."""

    label: str

    @abstractmethod
    def leq_array(self, a: Packed, b: Packed) -> BoolArray: ...

    def comparable_array(self, a: Packed, b: Packed) -> BoolArray:
        return self.leq_array(a, b) | self.leq_array(b, a)

    def leq(self, a: Element, b: Element) -> bool:
        return bool(self.leq_array(pack([a]), pack([b]))[0])

    def comparable(self, a: Element, b: Element) -> bool:
        return self.leq(a, b) or self.leq(b, a)


class FiniteOrder(PartialOrder):
    """An n×n boolean relation table; entry (i, j) means i <= j. Must be reflexive."""

    def __init__(self, table: Sequence[Sequence[bool]] | BoolArray, label: str = "finite order"):
        matrix = np.array(table, dtype=np.bool_)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] == 0:
            raise DomainError(f"order table must be a non-empty square matrix, got shape {matrix.shape}")
        if not np.all(diagonal := np.diag(matrix)):
            i = int(np.flatnonzero(~diagonal)[0])
            raise TableValidationError("order table is not reflexive", (i, i))
        matrix.setflags(write=False)
        self.table: BoolArray = matrix
        self.label = label

    @classmethod
    def discrete(cls, n: int) -> "FiniteOrder":
        """Only x <= x; every pair of distinct points is incomparable."""
        return cls(np.eye(n, dtype=np.bool_), label="discrete")

    @classmethod
    def from_pairs(cls, n: int, pairs: Sequence[tuple[int, int]], label: str = "finite order") -> "FiniteOrder":
        matrix = np.eye(n, dtype=np.bool_)
        for i, j in pairs:
            matrix[i, j] = True
        return cls(matrix, label=label)

    @property
    def size(self) -> int:
        return self.table.shape[0]

    @override
    def leq_array(self, a: Packed, b: Packed) -> BoolArray:
        return self.table[a, b]

    @override
    def __repr__(self) -> str:
        return f"FiniteOrder(label={self.label!r}, size={self.size})"


class PredicateOrder(PartialOrder):
    """
    x <= y iff `lhs rel rhs` holds for expressions in x and y.

    Comparisons allow eps_ax of slack, the same tolerance the identity rule uses.
    """

    def __init__(self, lhs: Expr, relation: Relation, rhs: Expr, label: str = "predicate order", eps_ax: float | None = None):
        if extra := (free_variables(lhs) | free_variables(rhs)) - {"x", "y"}:
            raise DomainError(f"order predicate may only use x and y, found {sorted(extra)}")
        self.lhs: Expr = lhs
        self.relation: Relation = Relation(relation)
        self.rhs: Expr = rhs
        self.label = label
        self.eps_ax: float = get_settings().eps_ax if eps_ax is None else eps_ax

    @override
    def leq_array(self, a: Packed, b: Packed) -> BoolArray:
        env = {"x": a.astype(np.float64), "y": b.astype(np.float64)}
        left = ensure_finite(evaluate_array(self.lhs, env), f"order lhs {self.lhs}")
        right = ensure_finite(evaluate_array(self.rhs, env), f"order rhs {self.rhs}")
        match self.relation:
            case Relation.LEQ:
                return left <= right + self.eps_ax
            case Relation.GEQ:
                return left >= right - self.eps_ax
            case Relation.EQ:
                return np.abs(left - right) <= self.eps_ax

    @override
    def __repr__(self) -> str:
        return f"PredicateOrder({self.lhs} {self.relation} {self.rhs})"
