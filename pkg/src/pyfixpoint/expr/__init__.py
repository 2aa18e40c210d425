from pyfixpoint.expr.evaluate import evaluate, evaluate_array
from pyfixpoint.expr.nodes import BinaryOperator, BinOp, Call, Expr, Num, Var, free_variables, unparse
from pyfixpoint.expr.parser import parse

__all__ = [
    "BinOp",
    "BinaryOperator",
    "Call",
    "Expr",
    "Num",
    "Var",
    "evaluate",
    "evaluate_array",
    "free_variables",
    "parse",
    "unparse",
]
