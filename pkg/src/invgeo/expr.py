"""Recursive-descent parser for coefficient and bracket-value expressions.

Grammar (whitespace insignificant, ``#`` comments to end of line)::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := INT ('/' INT)? | NAME | '(' expr ')'

Basis names may appear only when parsing bracket values, and then only
linearly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .poly import ParameterTable, Polynomial


class ParseError(ValueError):
    """Syntax or name error with a 1-based source position."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


_TOKEN = re.compile(
    r"(?P<ws>[ \t\r\n]+|\#[^\n]*)"
    r"|(?P<int>[0-9]+)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*/^()])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # 'int', 'name', 'op', 'eof'
    text: str
    line: int
    column: int


def tokenize(text: str, line: int = 1, column: int = 1) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, column)
        kind = m.lastgroup
        s = m.group()
        if kind != "ws":
            tokens.append(Token(kind, s, line, column))
        for ch in s:
            if ch == "\n":
                line, column = line + 1, 1
            else:
                column += 1
        pos = m.end()
    tokens.append(Token("eof", "", line, column))
    return tokens


class _Linear:
    """Scalar part plus optional coefficients on basis vectors."""

    __slots__ = ("scalar", "vec")

    def __init__(self, scalar: Polynomial, vec: Optional[list[Polynomial]] = None):
        self.scalar = scalar
        self.vec = vec


class _Parser:
    def __init__(self, tokens, params: ParameterTable, basis: Optional[Sequence[str]]):
        self.toks = tokens
        self.i = 0
        self.params = params
        self.basis = {n: k for k, n in enumerate(basis)} if basis is not None else None
        self.dim = len(basis) if basis is not None else 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def advance(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok: Optional[Token] = None):
        tok = tok or self.tok
        raise ParseError(msg, tok.line, tok.column)

    def expect_end(self):
        if self.tok.kind != "eof":
            self.error(f"unexpected {self.tok.text!r}")

    # arithmetic on linear values
    def _add(self, a: _Linear, b: _Linear, sign: int) -> _Linear:
        s = a.scalar + b.scalar if sign > 0 else a.scalar - b.scalar
        if a.vec is None and b.vec is None:
            return _Linear(s)
        zero = [self.params.zero] * self.dim
        av, bv = a.vec or zero, b.vec or zero
        v = [x + y if sign > 0 else x - y for x, y in zip(av, bv)]
        return _Linear(s, v)

    def _mul(self, a: _Linear, b: _Linear, tok: Token) -> _Linear:
        if a.vec is not None and b.vec is not None:
            self.error("basis vector used nonlinearly", tok)
        if a.vec is not None and a.scalar:
            a, b = b, a
        if b.vec is not None:
            if b.scalar:
                self.error("basis vector used nonlinearly", tok)
            return _Linear(self.params.zero, [a.scalar * c for c in b.vec])
        if a.vec is not None:
            return _Linear(self.params.zero, [b.scalar * c for c in a.vec])
        return _Linear(a.scalar * b.scalar)

    def expr(self) -> _Linear:
        val = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance()
            rhs = self.term()
            val = self._add(val, rhs, 1 if op.text == "+" else -1)
        return val

    def term(self) -> _Linear:
        val = self.unary()
        while self.tok.kind == "op" and self.tok.text == "*":
            op = self.advance()
            rhs = self.unary()
            val = self._mul(val, rhs, op)
        return val

    def unary(self) -> _Linear:
        if self.tok.kind == "op" and self.tok.text == "-":
            self.advance()
            v = self.unary()
            return _Linear(-v.scalar, None if v.vec is None else [-c for c in v.vec])
        return self.power()

    def power(self) -> _Linear:
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            caret = self.advance()
            t = self.tok
            if t.kind == "op" and t.text == "-":
                self.error("negative exponent", t)
            if t.kind != "int":
                self.error("exponent must be a nonnegative integer literal", t)
            self.advance()
            if self.tok.kind == "op" and self.tok.text == "/":
                self.error("exponent must be a nonnegative integer literal", self.tok)
            e = int(t.text)
            if base.vec is not None:
                if e != 1:
                    self.error("basis vector used nonlinearly", caret)
                return base
            return _Linear(base.scalar ** e)
        return base

    def atom(self) -> _Linear:
        t = self.tok
        if t.kind == "int":
            self.advance()
            value = Fraction(int(t.text))
            if self.tok.kind == "op" and self.tok.text == "/":
                self.advance()
                d = self.tok
                if d.kind != "int":
                    self.error("expected integer denominator", d)
                self.advance()
                if int(d.text) == 0:
                    self.error("zero denominator", d)
                value = Fraction(int(t.text), int(d.text))
            return _Linear(self.params.const(value))
        if t.kind == "name":
            self.advance()
            if t.text in self.params:
                return _Linear(self.params.var(t.text))
            if self.basis is not None and t.text in self.basis:
                v = [self.params.zero] * self.dim
                v[self.basis[t.text]] = self.params.one
                return _Linear(self.params.zero, v)
            self.error(f"unknown identifier {t.text!r}", t)
        if t.kind == "op" and t.text == "(":
            self.advance()
            v = self.expr()
            if not (self.tok.kind == "op" and self.tok.text == ")"):
                self.error("expected ')'")
            self.advance()
            return v
        if t.kind == "eof":
            self.error("unexpected end of input", t)
        self.error(f"unexpected {t.text!r}", t)


def parse_expression(text: str, params: ParameterTable, line: int = 1, column: int = 1) -> Polynomial:
    """Parse a scalar polynomial expression over ``params``."""
    p = _Parser(tokenize(text, line, column), params, None)
    if p.tok.kind == "eof":
        p.error("empty expression")
    v = p.expr()
    p.expect_end()
    return v.scalar


def parse_bracket_value(
    text: str, basis: Sequence[str], params: ParameterTable, line: int = 1, column: int = 1
) -> list[Polynomial]:
    """Parse ``0`` or a linear combination of basis names into coordinates."""
    p = _Parser(tokenize(text, line, column), params, basis)
    first = p.tok
    if first.kind == "eof":
        p.error("empty bracket value")
    v = p.expr()
    p.expect_end()
    if v.scalar:
        p.error("term without a basis vector", first)
    if v.vec is None:
        return [params.zero] * len(basis)
    return v.vec
