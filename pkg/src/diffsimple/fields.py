"""Coefficient fields: the rationals and prime fields F_p.

Rational coefficients are stored as :class:`fractions.Fraction`, prime-field
coefficients as plain ints in ``[0, p)``. A field object owns the arithmetic,
so polynomials never have to inspect their coefficients' types.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class RationalField:
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __call__(self, value) -> Fraction:
        if isinstance(value, tuple):
            num, den = value
            if den == 0:
                raise InputError("zero denominator")
            return Fraction(num, den)
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def format(self, a) -> str:
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"


class PrimeField:
    def __init__(self, p: int):
        if not _is_prime(p):
            raise InputError(f"characteristic {p} is not prime")
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"GF({self.characteristic})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __call__(self, value) -> int:
        p = self.characteristic
        if isinstance(value, tuple):
            num, den = value
            if den % p == 0:
                raise InputError(f"denominator {den} vanishes modulo {p}")
            return num * pow(den, -1, p) % p
        if isinstance(value, Fraction):
            return self((value.numerator, value.denominator))
        return int(value) % p

    def add(self, a, b):
        return (a + b) % self.characteristic

    def sub(self, a, b):
        return (a - b) % self.characteristic

    def mul(self, a, b):
        return a * b % self.characteristic

    def neg(self, a):
        return -a % self.characteristic

    def inv(self, a):
        if a % self.characteristic == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.characteristic)

    def format(self, a) -> str:
        return str(a)


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_for(char: int | None):
    """Field of the given characteristic (``None`` or 0 means QQ)."""
    if not char:
        return QQ
    return PrimeField(char)
