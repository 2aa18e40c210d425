import math
from collections.abc import Callable
from typing import Final

import numpy as np
from numpy.typing import NDArray

from pyfixpoint.expr.nodes import BinaryOperator, BinOp, Call, Expr, Num, Var
from pyfixpoint.shared.types import (
    ArrayEnv,
    DivisionByZeroError,
    Env,
    NonFiniteError,
    UnboundVariableError,
)

type FloatArray = NDArray[np.float64]

_SCALAR_OPS: Final[dict[BinaryOperator, Callable[[float, float], float]]] = {
    BinaryOperator.ADD: lambda a, b: a + b,
    BinaryOperator.SUB: lambda a, b: a - b,
    BinaryOperator.MUL: lambda a, b: a * b,
    BinaryOperator.DIV: lambda a, b: a / b,
}

_SCALAR_FUNCS: Final[dict[str, Callable[..., float]]] = {
    "min": min,
    "max": max,
    "abs": abs,
}


def _finite(value: float, what: str) -> float:
    if not math.isfinite(value):
        raise NonFiniteError(f"{what} produced {value}")
    return value


def evaluate(e: Expr, env: Env) -> float:
    """
    Evaluate with IEEE double arithmetic.

    Raises:
        UnboundVariableError: a free variable of `e` is missing from `env`.
        DivisionByZeroError: a divisor evaluated to exactly 0.
        NonFiniteError: NaN or an infinity appeared anywhere along the way.
    """
    match e:
        case Num(value):
            return _finite(value, f"constant {value}")
        case Var(name):
            try:
                return _finite(float(env[name]), f"variable {name}")
            except KeyError:
                raise UnboundVariableError(name) from None
        case BinOp(op, left, right):
            a = evaluate(left, env)
            b = evaluate(right, env)
            if op is BinaryOperator.DIV and b == 0:
                raise DivisionByZeroError(f"division by zero in {e}")
            return _finite(_SCALAR_OPS[op](a, b), str(e))
        case Call(func, args):
            return _finite(_SCALAR_FUNCS[func](*(evaluate(a, env) for a in args)), str(e))


def _array_op(op: BinaryOperator, a: FloatArray, b: FloatArray) -> FloatArray:
    match op:
        case BinaryOperator.ADD:
            return np.add(a, b)
        case BinaryOperator.SUB:
            return np.subtract(a, b)
        case BinaryOperator.MUL:
            return np.multiply(a, b)
        case BinaryOperator.DIV:
            a, b = np.broadcast_arrays(a, b)
            out = np.full(a.shape, np.nan)
            return np.divide(a, b, out=out, where=b != 0)


def _array_eval(e: Expr, env: ArrayEnv) -> FloatArray:
    match e:
        case Num(value):
            return np.asarray(value, dtype=np.float64)
        case Var(name):
            try:
                return np.asarray(env[name], dtype=np.float64)
            except KeyError:
                raise UnboundVariableError(name) from None
        case BinOp(op, left, right):
            result = _array_op(op, _array_eval(left, env), _array_eval(right, env))
        case Call("abs", (arg,)):
            result = np.abs(_array_eval(arg, env))
        case Call("min", (a, b)):
            result = np.minimum(_array_eval(a, env), _array_eval(b, env))
        case Call(_, (a, b)):
            result = np.maximum(_array_eval(a, env), _array_eval(b, env))
        case Call(func, _):
            raise ValueError(f"malformed call node {func}")
    return np.where(np.isfinite(result), result, np.nan)


def evaluate_array(e: Expr, env: ArrayEnv) -> FloatArray:
    """
    Vectorised `evaluate` over equally shaped arrays.

    Entries whose scalar evaluation would raise come back as NaN, so callers can
    locate the offending inputs instead of losing the whole batch. Unbound
    variables still raise.
    """
    shape = np.broadcast_shapes(*(np.shape(v) for v in env.values())) if env else ()
    with np.errstate(all="ignore"):
        result = _array_eval(e, env)
    return np.array(np.broadcast_to(result, shape), dtype=np.float64)
