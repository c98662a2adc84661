"""Expression language: tokenizer, recursive-descent parser, printer, evaluator.

Grammar (whitespace is insignificant)::

    expr    := term ('+' term)*
    term    := unary ('*' unary)*
    unary   := '-' unary | '+' unary | primary
    primary := INT ['/' INT] | 'recip' '(' expr ')' | '(' expr ')'

There is no division operator: '/' only joins the two halves of a literal.
Literals are unsigned; a leading '-' produces a Neg node.
"""

from __future__ import annotations

from dataclasses import dataclass

from proper_rationals.rational_core import (
    CanonicalRational,
    RationalError,
    ZeroDenominator,
    add,
    mul,
    neg,
    normalize,
    reciprocal,
)

__all__ = [
    "Add",
    "Expr",
    "ExpressionTooDeep",
    "IntegerLiteral",
    "Mul",
    "Neg",
    "ParseError",
    "RationalLiteral",
    "Recip",
    "RecipOfZero",
    "evaluate",
    "parse",
    "to_text",
]


class ParseError(RationalError):
    """Exception raised on malformed expression text."""

    def __init__(self, position: int, expected: tuple[str, ...], found: str) -> None:
        """Initialize ParseError with the 0-based position and the expected tokens."""
        self.position = position
        self.expected = tuple(sorted(expected))
        self.found = found
        super().__init__(
            f"Parse error at position {position}: expected {' or '.join(self.expected)}, "
            f"found {found}"
        )


class ExpressionTooDeep(RationalError):
    """Exception raised when an expression nests deeper than the interpreter stack allows."""

    def __init__(self) -> None:
        """Initialize ExpressionTooDeep."""
        super().__init__("Expression nested too deeply")


class RecipOfZero(RationalError):
    """Exception raised when recip(...) is applied to a zero value."""

    def __init__(self, text: str) -> None:
        """Initialize RecipOfZero with the printed argument."""
        self.text = text
        super().__init__(f"Reciprocal of zero: recip({text})")


@dataclass(frozen=True, slots=True)
class RationalLiteral:
    numerator: int
    denominator: int

    def __post_init__(self) -> None:
        if self.denominator == 0:
            raise ZeroDenominator(self.numerator)
        if self.numerator < 0 or self.denominator < 0:
            raise RationalError(
                f"Literal parts must be unsigned, got {self.numerator}/{self.denominator}"
            )


@dataclass(frozen=True, slots=True)
class IntegerLiteral:
    value: int

    def __post_init__(self) -> None:
        if self.value < 0:
            raise RationalError(f"Literal must be unsigned, got {self.value}")


@dataclass(frozen=True, slots=True)
class Add:
    left: Expr
    right: Expr


@dataclass(frozen=True, slots=True)
class Mul:
    left: Expr
    right: Expr


@dataclass(frozen=True, slots=True)
class Neg:
    operand: Expr


@dataclass(frozen=True, slots=True)
class Recip:
    operand: Expr


Expr = RationalLiteral | IntegerLiteral | Add | Mul | Neg | Recip


# Token kinds double as the descriptions used in ParseError.expected
_INT = "integer"
_RECIP = "'recip'"
_END = "end of input"
_SYMBOLS = {"+": "'+'", "*": "'*'", "-": "'-'", "/": "'/'", "(": "'('", ")": "')'"}
_PRIMARY_START = (_INT, _RECIP, "'('", "'-'", "'+'")


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str
    text: str
    position: int


def _tokenize(source: str) -> list[_Token]:
    tokens: list[_Token] = []
    idx = 0
    while idx < len(source):
        ch = source[idx]
        if ch.isspace():
            idx += 1
            continue
        start = idx
        if ch in "0123456789":
            while idx < len(source) and source[idx] in "0123456789":
                idx += 1
            tokens.append(_Token(_INT, source[start:idx], start))
            continue
        if ch in _SYMBOLS:
            tokens.append(_Token(_SYMBOLS[ch], ch, start))
            idx += 1
            continue
        if ch.isalpha():
            while idx < len(source) and source[idx].isalpha():
                idx += 1
            word = source[start:idx]
            if word != "recip":
                raise ParseError(start, _PRIMARY_START, repr(word))
            tokens.append(_Token(_RECIP, word, start))
            continue
        raise ParseError(start, _PRIMARY_START, repr(ch))
    tokens.append(_Token(_END, "", len(source)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]) -> None:
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        if token.kind != _END:
            self.pos += 1
        return token

    def expect(self, kind: str, also_expected: tuple[str, ...] = ()) -> _Token:
        token = self.peek()
        if token.kind != kind:
            raise ParseError(token.position, (kind, *also_expected), _describe(token))
        return self.advance()

    def parse(self) -> Expr:
        expr = self.expr()
        self.expect(_END, ("'+'", "'*'"))
        return expr

    def expr(self) -> Expr:
        node = self.term()
        while self.peek().kind == "'+'":
            self.advance()
            node = Add(node, self.term())
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.peek().kind == "'*'":
            self.advance()
            node = Mul(node, self.unary())
        return node

    def unary(self) -> Expr:
        kind = self.peek().kind
        if kind == "'-'":
            self.advance()
            return Neg(self.unary())
        if kind == "'+'":
            self.advance()
            return self.unary()
        return self.primary()

    def primary(self) -> Expr:
        token = self.peek()
        if token.kind == _INT:
            self.advance()
            numerator = int(token.text)
            if self.peek().kind != "'/'":
                return IntegerLiteral(numerator)
            self.advance()
            denominator = int(self.expect(_INT).text)
            return RationalLiteral(numerator, denominator)
        if token.kind == _RECIP:
            self.advance()
            self.expect("'('")
            inner = self.expr()
            self.expect("')'", ("'+'", "'*'"))
            return Recip(inner)
        if token.kind == "'('":
            self.advance()
            inner = self.expr()
            self.expect("')'", ("'+'", "'*'"))
            return inner
        raise ParseError(token.position, _PRIMARY_START, _describe(token))


def _describe(token: _Token) -> str:
    return _END if token.kind == _END else repr(token.text)


def parse(text: str) -> Expr:
    """Parse expression text into an Expr tree.

    Raises:
        ParseError: On malformed input, with position and expected tokens
        ZeroDenominator: On a literal such as 1/0
        ExpressionTooDeep: If parentheses, recip or unary signs nest past the recursion limit
    """
    try:
        return _Parser(_tokenize(text)).parse()
    except RecursionError:
        raise ExpressionTooDeep() from None


_PREC_ADD = 1
_PREC_MUL = 2
_PREC_UNARY = 3
_PREC_ATOM = 4


def _left_spine(e: Add | Mul) -> tuple[Expr, list[Expr]]:
    """Flatten a left-leaning chain of one operator into (leftmost, right operands)."""
    kind = type(e)
    rights: list[Expr] = []
    node: Expr = e
    while isinstance(node, kind):
        rights.append(node.right)
        node = node.left
    rights.reverse()
    return node, rights


def _render(e: Expr) -> tuple[str, int]:
    match e:
        case IntegerLiteral(value):
            return str(value), _PREC_ATOM
        case RationalLiteral(numerator, denominator):
            return f"{numerator}/{denominator}", _PREC_ATOM
        case Recip(operand):
            return f"recip({_render(operand)[0]})", _PREC_ATOM
        case Neg(operand):
            return f"-{_wrap(operand, _PREC_UNARY)}", _PREC_UNARY
        case Mul():
            # right operands one level tighter so left association survives
            first, rights = _left_spine(e)
            parts = [_wrap(first, _PREC_MUL), *(_wrap(r, _PREC_UNARY) for r in rights)]
            return " * ".join(parts), _PREC_MUL
        case Add():
            first, rights = _left_spine(e)
            parts = [_wrap(first, _PREC_ADD), *(_wrap(r, _PREC_MUL) for r in rights)]
            return " + ".join(parts), _PREC_ADD
    raise TypeError(f"Not an expression: {e!r}")


def _wrap(e: Expr, min_prec: int) -> str:
    text, prec = _render(e)
    return f"({text})" if prec < min_prec else text


def to_text(e: Expr) -> str:
    """Print e with the fewest parentheses that parse back to the same tree.

    Raises:
        ExpressionTooDeep: If e nests past the recursion limit
    """
    try:
        return _render(e)[0]
    except RecursionError:
        raise ExpressionTooDeep() from None


def _evaluate(e: Expr) -> CanonicalRational:
    match e:
        case IntegerLiteral(value):
            return CanonicalRational.of(value)
        case RationalLiteral(numerator, denominator):
            return normalize(numerator, denominator)
        case Add():
            first, rights = _left_spine(e)
            acc = _evaluate(first)
            for r in rights:
                acc = add(acc, _evaluate(r))
            return acc
        case Mul():
            first, rights = _left_spine(e)
            acc = _evaluate(first)
            for r in rights:
                acc = mul(acc, _evaluate(r))
            return acc
        case Neg(operand):
            return neg(_evaluate(operand))
        case Recip(operand):
            value = _evaluate(operand)
            if value.c == 0:
                raise RecipOfZero(to_text(operand))
            return reciprocal(value)
    raise TypeError(f"Not an expression: {e!r}")


def evaluate(e: Expr) -> CanonicalRational:
    """Evaluate e exactly.

    Left-leaning sums and products are folded in a loop, so long flat chains
    such as 1/2 + 1/2 + ... do not consume stack.

    Raises:
        RecipOfZero: If a recip(...) argument evaluates to zero
        ExpressionTooDeep: If e nests past the recursion limit
    """
    try:
        return _evaluate(e)
    except RecursionError:
        raise ExpressionTooDeep() from None
