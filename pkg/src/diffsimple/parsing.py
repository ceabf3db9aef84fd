"""Recursive-descent parser for polynomial and operator literals.

Grammar (whitespace insignificant, explicit ``*`` required)::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := rational | var ('^' exponent)? | '(' expr ')' | '-' factor
    rational := int ('/' uint)?

Polynomials accept unsigned exponents only. Operator literals in the skew
Laurent ring (atoms ``h`` and ``x``) also accept ``x^-k``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import InputError, ParseError
from .fields import QQ

_TOKEN = re.compile(r"(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S)")


def _tokenize(text):
    # offsets are reported in bytes of the UTF-8 encoding
    def offset(i):
        return len(text[:i].encode())

    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        start = offset(pos)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, offset(len(text))))
    return tokens


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("name", "int", "("):
                raise ParseError("implicit multiplication is not allowed; use '*'", tok[2])
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = self.ring.add(value, rhs) if op == "+" else self.ring.sub(value, rhs)
        return value

    def term(self):
        value = self.factor()
        while self.peek()[0] == "*":
            self.take()
            value = self.ring.mul(value, self.factor())
        tok = self.peek()
        if tok[0] in ("name", "int", "("):
            raise ParseError("implicit multiplication is not allowed; use '*'", tok[2])
        return value

    def factor(self):
        kind, val, pos = self.peek()
        if kind == "-":
            self.take()
            return self.ring.neg(self.factor())
        if kind == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        if kind == "int":
            self.take()
            if self.peek()[0] == "/":
                self.take()
                den_tok = self.peek()
                if den_tok[0] != "int":
                    raise ParseError("expected an unsigned integer denominator", den_tok[2])
                self.take()
                if den_tok[1] == 0:
                    raise ParseError("zero denominator", den_tok[2])
                return self.ring.const(val, den_tok[1], pos)
            return self.ring.const(val, 1, pos)
        if kind == "name":
            self.take()
            exp = 1
            if self.peek()[0] == "^":
                self.take()
                exp = self.exponent(val)
            return self.ring.atom(val, exp, pos)
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {val!r}", pos)

    def exponent(self, name):
        sign = 1
        tok = self.peek()
        if tok[0] == "-":
            if not self.ring.allows_negative(name):
                raise ParseError(f"negative exponent not allowed on {name!r}", tok[2])
            self.take()
            sign = -1
            tok = self.peek()
        if tok[0] != "int":
            raise ParseError("expected an integer exponent", tok[2])
        self.take()
        if self.peek()[0] == "/":
            raise ParseError("division inside an exponent", self.peek()[2])
        return sign * tok[1]


class _PolyRing:
    def __init__(self, variables, field):
        from .poly import MultiPoly

        self.MP = MultiPoly
        self.variables = tuple(variables)
        self.field = field

    def const(self, num, den, pos):
        try:
            return self.MP.constant(self.variables, self.field((num, den)), self.field)
        except InputError as exc:
            raise ParseError(str(exc), pos) from None

    def atom(self, name, exp, pos):
        if name not in self.variables:
            raise ParseError(f"unknown variable {name!r}", pos)
        return self.MP.var(self.variables, name, self.field) ** exp

    def allows_negative(self, name):
        return False

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a


class _OpRing:
    def __init__(self, h="h", x="x"):
        from . import ore

        self.ore = ore
        self.h, self.x = h, x

    def const(self, num, den, pos):
        return self.ore.GradedOp.scalar(Fraction(num, den))

    def atom(self, name, exp, pos):
        ore = self.ore
        if name == self.h:
            return ore.GradedOp({0: ore.UniPoly.h() ** exp})
        if name == self.x:
            return ore.GradedOp.x(exp)
        raise ParseError(f"unknown operator atom {name!r} (expected {self.h!r} or {self.x!r})", pos)

    def allows_negative(self, name):
        return name == self.x

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a


def parse_poly(text: str, variables, field=QQ):
    """Parse ``text`` as a polynomial in ``variables`` over ``field``."""
    if isinstance(variables, str):
        variables = [v.strip() for v in variables.split(",") if v.strip()]
    for v in variables:
        if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", v):
            raise InputError(f"invalid variable name {v!r}")
    if len(set(variables)) != len(variables):
        raise InputError("duplicate variable names")
    return _Parser(text, _PolyRing(variables, field)).parse()


def parse_op(text: str):
    """Parse an element of the skew Laurent ring written in ``h`` and ``x``."""
    return _Parser(text, _OpRing()).parse()
