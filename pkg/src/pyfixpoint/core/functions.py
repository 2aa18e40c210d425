from abc import ABC, abstractmethod
from collections.abc import Sequence
from typing import override

import numpy as np

from pyfixpoint.core.element import Element, FiniteIndex, FloatArray, Packed, Scalar, element_at, ensure_finite, pack
from pyfixpoint.expr import BinaryOperator, BinOp, Expr, Num, Var, evaluate, evaluate_array, free_variables
from pyfixpoint.shared.settings import get_settings
from pyfixpoint.shared.types import DomainError
from pyfixpoint.utils.type_check import require_type

_ONE_VARIABLE = frozenset({"x", "t"})


def _check_one_variable(expr: Expr, what: str) -> Expr:
    if extra := free_variables(expr) - _ONE_VARIABLE:
        raise DomainError(f"{what} takes one argument named x or t, found {sorted(extra)}")
    return expr


def _one_variable_env(values: FloatArray) -> dict[str, FloatArray]:
    # f and psi may be written in x or in t; both name the argument.
    return {"x": values, "t": values}


class ControlFunction:
    """
    psi: [0, inf) -> [0, inf) in the weak-contraction condition.

    psi(0) = 0 is checked once, exactly, on construction. Positivity,
    monotonicity and growth are left to the certifier.
    """

    def __init__(self, expr: Expr, growth_bound: float | None = None, growth_threshold: float | None = None):
        settings = get_settings()
        self.expr: Expr = _check_one_variable(expr, "psi")
        self.growth_bound: float = settings.growth_bound if growth_bound is None else growth_bound
        self.growth_threshold: float = settings.growth_threshold if growth_threshold is None else growth_threshold
        if self.growth_bound <= 0:
            raise DomainError(f"growth bound must be positive, got {self.growth_bound}")
        if (at_zero := self(0.0)) != 0.0:
            raise DomainError(f"psi(0) must be 0, got {at_zero}")

    @classmethod
    def from_banach(cls, c: float) -> "ControlFunction":
        """psi(t) = (1 - c) t, turning p(fx, fy) <= c p(x, y) into the weak-contraction form."""
        if not 0 <= c < 1:
            raise DomainError(f"Banach constant must lie in [0, 1), got {c}")
        return cls(BinOp(BinaryOperator.MUL, Num(1.0 - c), Var("t")))

    def __call__(self, t: float) -> float:
        return evaluate(self.expr, {"x": t, "t": t})

    def values(self, t: FloatArray) -> FloatArray:
        return ensure_finite(evaluate_array(self.expr, _one_variable_env(t)), f"psi = {self.expr}")

    @override
    def __repr__(self) -> str:
        return f"ControlFunction(psi(t) = {self.expr})"


class SelfMap(ABC):
    label: str

    @abstractmethod
    def apply_array(self, a: Packed) -> Packed: ...

    def __call__(self, a: Element) -> Element:
        return element_at(self.apply_array(pack([a])), 0)


class FiniteMap(SelfMap):
    """f(i) = table[i] on {0..n-1}."""

    def __init__(self, table: Sequence[int], label: str = "finite map"):
        table = require_type(list(table), list[int], "map table")
        n = len(table)
        if n == 0:
            raise DomainError("map table is empty")
        if bad := [i for i, target in enumerate(table) if not 0 <= target < n]:
            raise DomainError(f"map table sends {bad[0]} to {table[bad[0]]}, outside 0..{n - 1}")
        self.table: tuple[int, ...] = tuple(int(v) for v in table)
        self._lookup: np.ndarray = np.array(self.table, dtype=np.int64)
        self.label = label

    @classmethod
    def identity(cls, n: int) -> "FiniteMap":
        return cls(list(range(n)), label="identity")

    @property
    def size(self) -> int:
        return len(self.table)

    @override
    def apply_array(self, a: Packed) -> Packed:
        return self._lookup[a]

    def __getitem__(self, i: int) -> int:
        return self.table[i]

    @override
    def __call__(self, a: Element) -> Element:
        if not isinstance(a, FiniteIndex):
            raise DomainError(f"finite map applied to {a!r}")
        return FiniteIndex(self.table[a.index])

    @override
    def __repr__(self) -> str:
        return f"FiniteMap({list(self.table)})"


class ScalarMap(SelfMap):
    """f given as an expression in one variable over an interval carrier."""

    def __init__(self, expr: Expr, label: str = "scalar map"):
        self.expr: Expr = _check_one_variable(expr, "f")
        self.label = label

    @override
    def apply_array(self, a: Packed) -> Packed:
        return ensure_finite(evaluate_array(self.expr, _one_variable_env(a.astype(np.float64))), f"f = {self.expr}")

    @override
    def __call__(self, a: Element) -> Element:
        if not isinstance(a, Scalar):
            raise DomainError(f"scalar map applied to {a!r}")
        return Scalar(evaluate(self.expr, {"x": a.value, "t": a.value}))

    @override
    def __repr__(self) -> str:
        return f"ScalarMap(f(t) = {self.expr})"
