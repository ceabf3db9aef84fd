"""The skew Laurent ring K[h][x, x^-1; sigma] of operators on K[x, x^-1].

Elements are finite sums ``sum_i p_i(h) x^i`` with coefficients written to
the left of the powers of ``x``. Here ``h = x d/dx`` and ``sigma(h) = h - 1``,
so ``x * p(h) = p(h - 1) * x`` and, more generally,

    (p(h) x^i) (q(h) x^j) = p(h) q(h - i) x^(i + j),
    (p(h) x^i) (x^n)      = p(n + i) x^(n + i).

Scalars are rationals; the ring is used in characteristic zero only.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest

from .errors import InputError


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class UniPoly:
    """Dense polynomial in ``h`` over QQ; coefficients low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(Fraction(c) for c in coeffs)

    @classmethod
    def h(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def from_roots(cls, roots, lead=1):
        p = cls.constant(lead)
        for r in roots:
            p = p * cls((-Fraction(r), 1))
        return p

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (1,)

    def leading_coefficient(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return UniPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-a for a in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise InputError("negative power of h")
        out = UniPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, value):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def shift(self, a) -> UniPoly:
        """``p(h - a)``, i.e. ``sigma^a`` applied to ``p``."""
        out = UniPoly()
        lin = UniPoly((-Fraction(a), 1))
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree()
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return UniPoly(quot), UniPoly(rem[:dq] if dq > 0 else ())

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def divides(self, other) -> bool:
        """True if ``self`` divides ``other``."""
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def monic(self):
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        return UniPoly(c / lead for c in self.coeffs)

    def format(self, var="h") -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            mag_s = str(mag)
            if k == 0:
                body = mag_s
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag_s}*{mono}"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)
        return " ".join(pieces)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"UniPoly({self.format()!r})"


def shift_poly(p: UniPoly, a: int) -> UniPoly:
    return p.shift(a)


def gcd_monic(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd in QQ[h] by the Euclidean algorithm."""
    if p.is_zero() and q.is_zero():
        raise InputError("gcd of two zero polynomials is undefined")
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


class LaurentPoly:
    """Finite sum ``sum_n c_n x^n`` with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {int(n): Fraction(c) for n, c in (terms or {}).items() if c != 0}

    @classmethod
    def monomial(cls, n, c=1):
        return cls({n: c})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for n, c in other.terms.items():
            out[n] = out.get(n, 0) + c
        return LaurentPoly(out)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def format(self, var="x"):
        if not self.terms:
            return "0"
        parts = []
        for n in sorted(self.terms):
            c = self.terms[n]
            parts.append(f"{c}" if n == 0 else f"{c}*{var}^{n}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self.format()!r})"


class GradedOp:
    """Element ``sum_i p_i(h) x^i`` of the skew Laurent ring."""

    __slots__ = ("components",)

    def __init__(self, components=None):
        comps = {}
        for i, p in (components or {}).items():
            if not isinstance(p, UniPoly):
                p = UniPoly.constant(p)
            if not p.is_zero():
                comps[int(i)] = p
        self.components = comps

    @classmethod
    def scalar(cls, c):
        return cls({0: UniPoly.constant(c)})

    @classmethod
    def x(cls, i=1):
        return cls({i: UniPoly.constant(1)})

    @classmethod
    def h(cls):
        return cls({0: UniPoly.h()})

    @classmethod
    def homogeneous(cls, p: UniPoly, i: int):
        return cls({i: p})

    def is_zero(self):
        return not self.components

    def degrees(self):
        return sorted(self.components)

    def is_homogeneous(self):
        return len(self.components) == 1

    def component(self, i) -> UniPoly:
        return self.components.get(i, UniPoly())

    def _coerce(self, other):
        if isinstance(other, GradedOp):
            return other
        if isinstance(other, UniPoly):
            return GradedOp({0: other})
        if isinstance(other, (int, Fraction)):
            return GradedOp.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.components)
        for i, p in other.components.items():
            out[i] = out[i] + p if i in out else p
        return GradedOp(out)

    __radd__ = __add__

    def __neg__(self):
        return GradedOp({i: -p for i, p in self.components.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for i, p in self.components.items():
            for j, q in other.components.items():
                term = p * q.shift(i)
                out[i + j] = out[i + j] + term if i + j in out else term
        return GradedOp(out)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self

    def __pow__(self, k):
        if k < 0:
            raise InputError("negative powers are not defined in general")
        out = GradedOp.scalar(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.components == other.components

    def __hash__(self):
        return hash(frozenset(self.components.items()))

    def apply(self, f: LaurentPoly) -> LaurentPoly:
        out = {}
        for i, p in self.components.items():
            for n, c in f.terms.items():
                v = p(n + i) * c
                if v:
                    out[n + i] = out.get(n + i, 0) + v
        return LaurentPoly(out)

    def order(self) -> int:
        if self.is_zero():
            raise InputError("the zero operator has no order")
        return max(p.degree() for p in self.components.values())

    def format(self) -> str:
        """Canonical text, components in increasing degree of ``x``."""
        if not self.components:
            return "0"
        parts = []
        for i in sorted(self.components):
            p = self.components[i]
            xs = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not xs:
                parts.append(p.format())
            elif p.is_one():
                parts.append(xs)
            elif p == -1:
                parts.append("-" + xs)
            elif len([c for c in p.coeffs if c]) == 1:
                parts.append(f"{p.format()}*{xs}")
            else:
                parts.append(f"({p.format()})*{xs}")
        out = parts[0]
        for part in parts[1:]:
            out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"GradedOp({self.format()!r})"


def op_mul(u: GradedOp, v: GradedOp) -> GradedOp:
    return u * v


def op_apply(u: GradedOp, f: LaurentPoly) -> LaurentPoly:
    return u.apply(f)


def op_commutator(u: GradedOp, v: GradedOp) -> GradedOp:
    return u * v - v * u


def op_order(u: GradedOp) -> int:
    return u.order()


def ad_nesting_depth(u: GradedOp, m: int = 1, limit: int = 64) -> int:
    """Number of ``ad(x^m)`` applications needed to kill ``u``, minus one.

    This is the order of ``u`` read straight off the definition of the
    order filtration; ``op_order`` computes the same number by degrees.
    """
    if m < 1:
        raise InputError("ad-nesting needs a positive power of x")
    xm = GradedOp.x(m)
    steps = 0
    while not u.is_zero():
        u = op_commutator(xm, u)
        steps += 1
        if steps > limit:
            raise InputError(f"operator not killed after {limit} commutators")
    return steps - 1
