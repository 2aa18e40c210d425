from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from typing import override


class BinaryOperator(StrEnum):
    ADD = "+"
    SUB = "-"
    MUL = "*"
    DIV = "/"

    @property
    def precedence(self) -> int:
        return 1 if self in (BinaryOperator.ADD, BinaryOperator.SUB) else 2


_ATOM_PRECEDENCE = 3


@dataclass(frozen=True, slots=True)
class Num:
    value: float

    @override
    def __str__(self) -> str:
        return unparse(self)


@dataclass(frozen=True, slots=True)
class Var:
    name: str

    @override
    def __str__(self) -> str:
        return unparse(self)


@dataclass(frozen=True, slots=True)
class BinOp:
    op: BinaryOperator
    left: Expr
    right: Expr

    @override
    def __str__(self) -> str:
        return unparse(self)


@dataclass(frozen=True, slots=True)
class Call:
    func: str
    args: tuple[Expr, ...]

    @override
    def __str__(self) -> str:
        return unparse(self)


type Expr = Num | Var | BinOp | Call


def _precedence(e: Expr) -> int:
    return e.op.precedence if isinstance(e, BinOp) else _ATOM_PRECEDENCE


def _operand(e: Expr, parent: int, *, right: bool) -> str:
    # Operators are left-associative, so an equal-precedence right operand keeps its parentheses.
    text = unparse(e)
    own = _precedence(e)
    if own < parent or (right and own == parent):
        return f"({text})"
    return text


def unparse(e: Expr) -> str:
    """
    Print an expression with the fewest parentheses that parse back to the same tree.

    Examples:
        >>> unparse(BinOp(BinaryOperator.SUB, Var("x"), BinOp(BinaryOperator.MUL, Num(0.25), Var("x"))))
        'x - 0.25 * x'
    """
    match e:
        case Num(value) if value < 0:
            # The grammar has no unary minus.
            return f"(0 - {-value!r})"
        case Num(value):
            return repr(float(value))
        case Var(name):
            return name
        case Call(func, args):
            return f"{func}({', '.join(unparse(a) for a in args)})"
        case BinOp(op, left, right):
            return f"{_operand(left, op.precedence, right=False)} {op} {_operand(right, op.precedence, right=True)}"


def free_variables(e: Expr) -> frozenset[str]:
    """Exactly the variable names occurring in `e`."""
    match e:
        case Num():
            return frozenset()
        case Var(name):
            return frozenset({name})
        case BinOp(_, left, right):
            return free_variables(left) | free_variables(right)
        case Call(_, args):
            return frozenset().union(*(free_variables(a) for a in args))
