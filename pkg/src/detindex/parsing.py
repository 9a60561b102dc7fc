"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace insensitive):

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor | '/' INT)*
    factor  := ('+' | '-') factor | atom ('^' INT)?
    atom    := INT | NAME | '(' expr ')'

Every failure raises ParseDiagnostic with a 1-based (line, column) position.
Implicit juxtaposition ("2x") is rejected; division is only defined by a
nonzero integer literal; exponents are nonnegative integer literals.
"""

from __future__ import annotations

from fractions import Fraction

from .orders import FIELD_MAX
from .poly import Polynomial
from .rings import RingContext

_MAX_DEPTH = 200


class ParseDiagnostic(Exception):
    """A parse failure at a source position."""

    def __init__(self, line: int, column: int, message: str):
        self.position = (line, column)
        self.message = message
        super().__init__(f"{line}:{column}: {message}")


class _Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col


def _tokenize(src: str):
    tokens = []
    line, col = 1, 1
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            tokens.append(_Token("int", src[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(_Token("name", src[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append(_Token(ch, ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseDiagnostic(line, col, f"unexpected character {ch!r}")
    tokens.append(_Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens, ring: RingContext):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, tok: _Token, message: str):
        raise ParseDiagnostic(tok.line, tok.col, message)

    def parse(self) -> Polynomial:
        value = self.expr(0)
        tok = self.peek()
        if tok.kind != "end":
            self.fail(tok, f"unexpected {tok.text!r} (missing operator?)")
        return value

    def expr(self, depth: int) -> Polynomial:
        if depth > _MAX_DEPTH:
            self.fail(self.peek(), "expression nested too deeply")
        value = self.term(depth)
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            rhs = self.term(depth)
            value = value + rhs if op.kind == "+" else value - rhs
        return value

    def term(self, depth: int) -> Polynomial:
        value = self.factor(depth)
        while True:
            tok = self.peek()
            if tok.kind == "*":
                self.advance()
                value = value * self.factor(depth)
            elif tok.kind == "/":
                self.advance()
                div = self.peek()
                if div.kind != "int":
                    self.fail(div, "division is only defined by a nonzero integer literal")
                self.advance()
                d = int(div.text)
                if d == 0:
                    self.fail(div, "division by zero")
                value = value * Fraction(1, d)
            else:
                return value

    def factor(self, depth: int) -> Polynomial:
        tok = self.peek()
        if tok.kind in ("+", "-"):
            self.advance()
            value = self.factor(depth + 1)
            return value if tok.kind == "+" else -value
        value = self.atom(depth)
        if self.peek().kind == "^":
            self.advance()
            exp = self.peek()
            if exp.kind != "int":
                self.fail(exp, "exponent must be a nonnegative integer literal")
            self.advance()
            e = int(exp.text)
            if e > FIELD_MAX:
                self.fail(exp, f"exponent {e} too large")
            value = value ** e
        return value

    def atom(self, depth: int) -> Polynomial:
        tok = self.advance()
        if tok.kind == "int":
            return Polynomial.constant(self.ring, int(tok.text))
        if tok.kind == "name":
            try:
                i = self.ring.index_of(tok.text)
            except KeyError:
                self.fail(tok, f"unknown variable {tok.text!r}")
            return Polynomial.variable(self.ring, i)
        if tok.kind == "(":
            value = self.expr(depth + 1)
            closing = self.advance()
            if closing.kind != ")":
                self.fail(closing, "expected ')'")
            return value
        self.fail(tok, f"expected a number, variable or '(' but found {tok.text!r}")


def parse_polynomial(src: str, ring: RingContext) -> Polynomial:
    if not src or not src.strip():
        raise ParseDiagnostic(1, 1, "empty polynomial expression")
    return _Parser(_tokenize(src), ring).parse()


def parse_rational(src) -> Fraction:
    """Rational constant: an integer or integer/integer (used in scenarios)."""
    if isinstance(src, int):
        return Fraction(src)
    if not isinstance(src, str):
        raise ParseDiagnostic(1, 1, f"expected rational constant, got {type(src).__name__}")
    text = src.strip()
    body = text[1:] if text[:1] in "+-" else text
    num, slash, den = body.partition("/")
    if not num.isdigit() or (slash and not den.isdigit()):
        raise ParseDiagnostic(1, 1, f"malformed rational constant {src!r}")
    if slash and int(den) == 0:
        raise ParseDiagnostic(1, 1, "zero denominator in rational constant")
    return Fraction(text)
