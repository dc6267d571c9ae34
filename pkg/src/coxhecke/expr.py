"""Text syntax for Hecke algebra elements.

Grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ('^' INT)?
    atom   := INT | 'q' | 'T[' names ']' | '(' expr ')'

``T[s,t]`` is T_s T_t, which equals T_st when the word is reduced; ``T[]`` is
T_1.  Products of two Hecke elements are computed in the algebra.
"""
from __future__ import annotations

import re
from typing import Union

from .coxeter import CayleyBall
from .exactmath import ONE, Q, IntPolynomial
from .exactmath.poly import format_poly
from .hecke import HeckeElement, left_by_generator, mul, one

_TOKEN = re.compile(r"\s*(?:(\d+)|(T\s*\[[^\]]*\])|(q)|([-+*^()]))")


class ExprError(ValueError):
    pass


Value = Union[IntPolynomial, HeckeElement]


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExprError(f"unexpected input at column {pos + 1}: {text[pos:pos + 10]!r}")
        num, tword, qvar, op = m.groups()
        if num is not None:
            out.append(("int", num))
        elif tword is not None:
            out.append(("T", tword[tword.index("[") + 1:-1]))
        elif qvar is not None:
            out.append(("q", "q"))
        else:
            out.append(("op", op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, ball: CayleyBall, text: str):
        self.ball = ball
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> Value:
        if not self.toks:
            raise ExprError("empty expression")
        v = self.expr()
        if self.i != len(self.toks):
            raise ExprError(f"trailing input near token {self.peek()[1]!r}")
        return v

    def expr(self) -> Value:
        v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            w = self.term()
            v = _add(self.ball, v, w if op == "+" else _neg(w))
        return v

    def term(self) -> Value:
        v = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            v = _mul(v, self.factor())
        return v

    def factor(self) -> Value:
        if self.peek() == ("op", "-"):
            self.take()
            return _neg(self.factor())
        v = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "int":
                raise ExprError("exponent must be a nonnegative integer")
            n = int(val)
            if isinstance(v, IntPolynomial):
                v = v ** n
            else:
                acc: Value = one(self.ball)
                for _ in range(n):
                    acc = mul(acc, v)
                v = acc
        return v

    def atom(self) -> Value:
        kind, val = self.take()
        if kind == "int":
            return IntPolynomial.constant(int(val))
        if kind == "q":
            return Q
        if kind == "T":
            return self.basis(val)
        if (kind, val) == ("op", "("):
            v = self.expr()
            if self.take() != ("op", ")"):
                raise ExprError("missing ')'")
            return v
        raise ExprError(f"unexpected token {val!r}")

    def basis(self, body: str) -> HeckeElement:
        names = [x.strip() for x in body.split(",") if x.strip()]
        m = self.ball.coxeter
        for nm in names:
            if nm not in m.names:
                raise ExprError(f"unknown generator {nm!r}; generators are {list(m.names)}")
        v = one(self.ball)
        for nm in reversed(names):
            v = left_by_generator(m.index(nm), v)
        return v


def _add(ball, a: Value, b: Value) -> Value:
    if isinstance(a, IntPolynomial) and isinstance(b, IntPolynomial):
        return a + b
    return _lift(ball, a) + _lift(ball, b)


def _lift(ball, a: Value) -> HeckeElement:
    return one(ball).scale(a) if isinstance(a, IntPolynomial) else a


def _neg(a: Value) -> Value:
    return -a


def _mul(a: Value, b: Value) -> Value:
    if isinstance(a, IntPolynomial):
        return a * b if isinstance(b, IntPolynomial) else b.scale(a)
    if isinstance(b, IntPolynomial):
        return a.scale(b)
    return mul(a, b)


def parse_element(ball: CayleyBall, text: str) -> HeckeElement:
    v = _Parser(ball, text).parse()
    return _lift(ball, v)


def format_element(a: HeckeElement) -> str:
    """Canonical text: terms sorted by (length, index), e.g. ``(q-1)*T[s] + q*T[]``."""
    if not a.support:
        return "0"
    ball = a.ball
    out = ""
    for w in sorted(a.support, key=lambda x: (ball.lengths[x], x)):
        c = a.support[w]
        neg = c.is_monomial() and c.lead < 0
        body = _coeff_str(-c if neg else c) + f"T{ball.word_str(w)}"
        if not out:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


def _coeff_str(c: IntPolynomial) -> str:
    if c == ONE:
        return ""
    s = format_poly(c.coeffs)
    if c.is_monomial():
        return s + "*"
    return f"({s})*"
