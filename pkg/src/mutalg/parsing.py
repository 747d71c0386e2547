"""Expression text <-> exact values.

Grammar: integer literals, identifiers, binary + - * /, exponent ^ followed
by an integer (negative exponents parenthesized), parentheses.  `*` is
mandatory; precedence ^ > unary - > * / > binary + -.  parse(format(f)) == f.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .laurent import LaurentPolynomial, VariableContext, grlex_key
from .ratfunc import RationalFunction


class ExpressionError(ValueError):
    """Syntax or name error in an expression, with a 1-based position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_at = pos + (len(text[pos:]) - len(stripped)) + 1
            raise ExpressionError(f"unexpected character {stripped[0]!r}", bad_at)
        if m.group("int") is not None:
            tokens.append(("int", m.group("int"), m.start("int") + 1))
        elif m.group("name") is not None:
            tokens.append(("name", m.group("name"), m.start("name") + 1))
        else:
            tokens.append(("op", m.group("op"), m.start("op") + 1))
        pos = m.end()
    tokens.append(("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: VariableContext):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.ctx = ctx

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op: str):
        kind, value, at = self.peek()
        if kind != "op" or value != op:
            raise ExpressionError(f"expected {op!r}", at)
        return self.advance()

    def parse(self) -> RationalFunction:
        value = self.sum()
        kind, text, at = self.peek()
        if kind != "end":
            raise ExpressionError(f"unexpected token {text!r}", at)
        return value

    def sum(self) -> RationalFunction:
        value = self.product()
        while True:
            kind, op, _ = self.peek()
            if kind == "op" and op in "+-":
                self.advance()
                rhs = self.product()
                value = value + rhs if op == "+" else value - rhs
            else:
                return value

    def product(self) -> RationalFunction:
        value = self.signed()
        while True:
            kind, op, at = self.peek()
            if kind == "op" and op in "*/":
                self.advance()
                rhs = self.signed()
                if op == "*":
                    value = value * rhs
                else:
                    if rhs.is_zero:
                        raise ExpressionError("division by zero", at)
                    value = value / rhs
            else:
                return value

    def signed(self) -> RationalFunction:
        kind, op, _ = self.peek()
        if kind == "op" and op == "-":
            self.advance()
            return -self.signed()
        return self.power()

    def power(self) -> RationalFunction:
        base = self.atom()
        kind, op, at = self.peek()
        if kind == "op" and op == "^":
            self.advance()
            n = self.exponent()
            if n < 0 and base.is_zero:
                raise ExpressionError("zero raised to a negative power", at)
            return base**n
        return base

    def exponent(self) -> int:
        kind, value, at = self.peek()
        if kind == "int":
            self.advance()
            return int(value)
        if kind == "op" and value == "(":
            self.advance()
            sign = 1
            kind, value, at2 = self.peek()
            if kind == "op" and value == "-":
                self.advance()
                sign = -1
                kind, value, at2 = self.peek()
            if kind != "int":
                raise ExpressionError("expected an integer exponent", at2)
            self.advance()
            self.expect_op(")")
            return sign * int(value)
        raise ExpressionError("expected an integer exponent", at)

    def atom(self) -> RationalFunction:
        kind, value, at = self.advance()
        if kind == "int":
            return RationalFunction.constant(self.ctx, int(value))
        if kind == "name":
            if value not in self.ctx:
                raise ExpressionError(f"unknown variable {value!r}", at)
            return RationalFunction.variable(self.ctx, value)
        if kind == "op" and value == "(":
            inner = self.sum()
            self.expect_op(")")
            return inner
        if kind == "end":
            raise ExpressionError("unexpected end of expression", at)
        raise ExpressionError(f"unexpected token {value!r}", at)


def parse_expr(text: str, ctx: VariableContext) -> RationalFunction:
    """Parse an expression over the given variables into a RationalFunction."""
    return _Parser(text, ctx).parse()


def parse_laurent(text: str, ctx: VariableContext) -> LaurentPolynomial:
    """Parse an expression that must denote a Laurent polynomial."""
    value = parse_expr(text, ctx)
    p = value.try_laurent()
    if p is None:
        raise ValueError(f"expression is not a Laurent polynomial: {text!r}")
    return p


# -- formatting ------------------------------------------------------------


def _format_power(name: str, e: int) -> str:
    if e == 1:
        return name
    if e > 1:
        return f"{name}^{e}"
    return f"{name}^({e})"


def _format_term(names, exp, coeff: Fraction) -> str:
    parts = [_format_power(n, e) for n, e in zip(names, exp) if e]
    if not parts:
        return str(coeff)
    body = "*".join(parts)
    if coeff == 1:
        return body
    if coeff == -1:
        return f"-{body}"
    return f"{coeff}*{body}"


def format_laurent(p: LaurentPolynomial) -> str:
    if p.is_zero:
        return "0"
    names = p.ctx.names
    pieces = []
    for exp in sorted(p.terms, key=grlex_key, reverse=True):
        coeff = p.terms[exp]
        if not pieces:
            pieces.append(_format_term(names, exp, coeff))
        elif coeff < 0:
            pieces.append(" - " + _format_term(names, exp, -coeff))
        else:
            pieces.append(" + " + _format_term(names, exp, coeff))
    return "".join(pieces)


def format_rational(f: RationalFunction) -> str:
    if f.den.is_one:
        return format_laurent(f.num)
    return f"({format_laurent(f.num)})/({format_laurent(f.den)})"
