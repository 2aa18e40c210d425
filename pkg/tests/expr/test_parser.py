"""Parsing, printing and error offsets of the expression language."""

import pytest
from hypothesis import given, strategies as st

from pyfixpoint.expr import BinaryOperator, BinOp, Call, Expr, Num, Var, free_variables, parse, unparse
from pyfixpoint.shared.types import ExprSyntaxError, UnknownIdentifierError


@pytest.mark.parametrize(
    "text,expected",
    [
        pytest.param("t / 2", BinOp(BinaryOperator.DIV, Var("t"), Num(2.0)), id="division"),
        pytest.param(
            "x + y * t",
            BinOp(BinaryOperator.ADD, Var("x"), BinOp(BinaryOperator.MUL, Var("y"), Var("t"))),
            id="mul_binds_tighter",
        ),
        pytest.param(
            "x - y - t",
            BinOp(BinaryOperator.SUB, BinOp(BinaryOperator.SUB, Var("x"), Var("y")), Var("t")),
            id="left_associative",
        ),
        pytest.param(
            "(x + y) * t",
            BinOp(BinaryOperator.MUL, BinOp(BinaryOperator.ADD, Var("x"), Var("y")), Var("t")),
            id="parentheses",
        ),
        pytest.param("max(x,y)", Call("max", (Var("x"), Var("y"))), id="max_call"),
        pytest.param("abs(x - y)", Call("abs", (BinOp(BinaryOperator.SUB, Var("x"), Var("y")),)), id="abs_call"),
        pytest.param("1e-3", Num(0.001), id="exponent_number"),
        pytest.param("  t  ", Var("t"), id="surrounding_whitespace"),
    ],
)
def test_parse(text: str, expected: Expr) -> None:
    assert parse(text) == expected


@pytest.mark.parametrize(
    "text,expected",
    [
        pytest.param("t / 4", "t / 4.0", id="numbers_print_as_floats"),
        pytest.param("x - (y - t)", "x - (y - t)", id="right_operand_keeps_parens"),
        pytest.param("(x - y) - t", "x - y - t", id="left_operand_drops_parens"),
        pytest.param("2 * (x + 1)", "2.0 * (x + 1.0)", id="lower_precedence_operand"),
        pytest.param("min(x, max(y, t))", "min(x, max(y, t))", id="nested_calls"),
    ],
)
def test_unparse(text: str, expected: str) -> None:
    assert unparse(parse(text)) == expected


def test_negative_number_prints_without_unary_minus() -> None:
    e = BinOp(BinaryOperator.MUL, Num(-0.5), Var("t"))
    assert unparse(e) == "(0 - 0.5) * t"
    assert parse(unparse(e)) == BinOp(
        BinaryOperator.MUL, BinOp(BinaryOperator.SUB, Num(0.0), Num(0.5)), Var("t"),
    )


@pytest.mark.parametrize(
    "text,offset",
    [
        pytest.param("", 0, id="empty"),
        pytest.param("   ", 0, id="blank"),
        pytest.param("1 +", 3, id="missing_operand"),
        pytest.param("(x + y", 6, id="unclosed_paren"),
        pytest.param("x y", 2, id="trailing_token"),
        pytest.param("x $ y", 2, id="bad_character"),
        pytest.param("max(x)", 5, id="max_needs_two_arguments"),
        pytest.param("-x", 0, id="no_unary_minus"),
        pytest.param("max(x,,y)", 6, id="empty_argument"),
        pytest.param("1e999", 0, id="literal_overflow"),
        pytest.param("t + 1e999", 4, id="literal_overflow_inside"),
    ],
)
def test_syntax_error_offset(text: str, offset: int) -> None:
    with pytest.raises(ExprSyntaxError) as info:
        _ = parse(text)
    assert info.value.offset == offset


def test_unknown_identifier_names_the_token() -> None:
    with pytest.raises(UnknownIdentifierError) as info:
        _ = parse("t + sqrt(t)")
    assert info.value.name == "sqrt"
    assert info.value.offset == 4


@pytest.mark.parametrize(
    "text,names",
    [
        pytest.param("3", set(), id="constant"),
        pytest.param("t / 2", {"t"}, id="one"),
        pytest.param("max(x, y) - x", {"x", "y"}, id="repeated"),
    ],
)
def test_free_variables(text: str, names: set[str]) -> None:
    assert free_variables(parse(text)) == names


def _exprs() -> st.SearchStrategy[Expr]:
    leaves = st.one_of(
        st.sampled_from(["x", "y", "t"]).map(Var),
        st.floats(min_value=0, max_value=1e6, allow_nan=False).map(Num),
    )
    return st.recursive(
        leaves,
        lambda inner: st.one_of(
            st.builds(BinOp, st.sampled_from(list(BinaryOperator)), inner, inner),
            st.builds(lambda a: Call("abs", (a,)), inner),
            st.builds(lambda f, a, b: Call(f, (a, b)), st.sampled_from(["min", "max"]), inner, inner),
        ),
        max_leaves=12,
    )


@given(_exprs())
def test_unparse_parses_back_to_the_same_tree(e: Expr) -> None:
    assert parse(unparse(e)) == e
