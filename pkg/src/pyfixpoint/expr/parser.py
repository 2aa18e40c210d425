import math
import re
from dataclasses import dataclass
from enum import StrEnum, auto
from typing import Final

from pyfixpoint.expr.nodes import BinaryOperator, BinOp, Call, Expr, Num, Var
from pyfixpoint.shared.consts import BINARY_FUNCTIONS, UNARY_FUNCTIONS, VARIABLES
from pyfixpoint.shared.types import ExprSyntaxError, UnknownIdentifierError


class TokenKind(StrEnum):
    NUMBER = auto()
    IDENT = auto()
    OP = auto()
    LPAREN = auto()
    RPAREN = auto()
    COMMA = auto()
    END = auto()


@dataclass(frozen=True, slots=True)
class Token:
    kind: TokenKind
    text: str
    offset: int


_TOKEN_RE: Final[re.Pattern[str]] = re.compile(
    r"""
    (?P<ws>\s+)
    | (?P<number>\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)
    | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
    | (?P<op>[-+*/])
    | (?P<lparen>\()
    | (?P<rparen>\))
    | (?P<comma>,)
    """,
    re.VERBOSE,
)

_GROUP_KIND: Final[dict[str, TokenKind]] = {
    "number": TokenKind.NUMBER,
    "ident": TokenKind.IDENT,
    "op": TokenKind.OP,
    "lparen": TokenKind.LPAREN,
    "rparen": TokenKind.RPAREN,
    "comma": TokenKind.COMMA,
}

KNOWN_IDENTIFIERS: Final[frozenset[str]] = VARIABLES | BINARY_FUNCTIONS | UNARY_FUNCTIONS


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        group = match.lastgroup
        if group is not None and group != "ws":
            if group == "ident" and match.group() not in KNOWN_IDENTIFIERS:
                raise UnknownIdentifierError(match.group(), pos)
            tokens.append(Token(_GROUP_KIND[group], match.group(), pos))
        pos = match.end()
    tokens.append(Token(TokenKind.END, "", len(text)))
    return tokens


class _Parser:
    """Recursive descent over the token list, one method per grammar rule."""

    def __init__(self, tokens: list[Token]):
        self.tokens: list[Token] = tokens
        self.index: int = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def expect(self, kind: TokenKind, what: str) -> Token:
        if self.current.kind is not kind:
            raise ExprSyntaxError(f"expected {what}, found {self._describe(self.current)}", self.current.offset)
        return self.advance()

    @staticmethod
    def _describe(token: Token) -> str:
        return "end of input" if token.kind is TokenKind.END else repr(token.text)

    def expr(self) -> Expr:
        node = self.term()
        while self.current.kind is TokenKind.OP and self.current.text in "+-":
            op = BinaryOperator(self.advance().text)
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.current.kind is TokenKind.OP and self.current.text in "*/":
            op = BinaryOperator(self.advance().text)
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> Expr:
        token = self.current
        match token.kind:
            case TokenKind.NUMBER:
                self.advance()
                if not math.isfinite(value := float(token.text)):
                    raise ExprSyntaxError(f"number {token.text} is out of range", token.offset)
                return Num(value)
            case TokenKind.LPAREN:
                self.advance()
                inner = self.expr()
                _ = self.expect(TokenKind.RPAREN, "')'")
                return inner
            case TokenKind.IDENT if token.text in VARIABLES:
                self.advance()
                return Var(token.text)
            case TokenKind.IDENT:
                return self.call()
            case _:
                raise ExprSyntaxError(
                    f"expected a number, variable, function call or '(', found {self._describe(token)}",
                    token.offset,
                )

    def call(self) -> Call:
        name = self.advance().text
        _ = self.expect(TokenKind.LPAREN, f"'(' after {name}")
        args: list[Expr] = [self.expr()]
        if name in BINARY_FUNCTIONS:
            _ = self.expect(TokenKind.COMMA, f"',' in {name}(a, b)")
            args.append(self.expr())
        _ = self.expect(TokenKind.RPAREN, "')'")
        return Call(name, tuple(args))


def parse(text: str) -> Expr:
    """
    Parse an arithmetic expression over x, y, t.

    `*` and `/` bind tighter than `+` and `-`; all four are left-associative.

    Examples:
        >>> parse("max(x,y)")
        Call(func='max', args=(Var(name='x'), Var(name='y')))

    Raises:
        ExprSyntaxError: malformed input, with the 0-based offset of the offending token.
        UnknownIdentifierError: a name outside x, y, t, min, max, abs.
    """
    if not text.strip():
        raise ExprSyntaxError("empty expression", 0)
    parser = _Parser(tokenize(text))
    node = parser.expr()
    if parser.current.kind is not TokenKind.END:
        raise ExprSyntaxError(f"unexpected {parser._describe(parser.current)}", parser.current.offset)
    return node
