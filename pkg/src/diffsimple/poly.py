"""Sparse multivariate polynomials over QQ or F_p and a Buchberger engine.

A polynomial is an immutable map from exponent tuples to nonzero
coefficients. Groebner bases are computed with Buchberger's algorithm using
the normal selection strategy and Buchberger's product and chain criteria;
outputs are reduced and monic, hence canonical for a fixed monomial order.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import BudgetExceeded, InputError
from .fields import QQ

Monomial = tuple  # tuple[int, ...], one exponent per variable

DEFAULT_MAX_PAIRS = 20000
DEFAULT_MAX_BASIS = 2000


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_divides(a, b):
    """True if ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b, a):
    return tuple(y - x for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialOrder:
    """``grevlex`` or ``lex`` with a variable priority (highest first)."""

    kind: str
    priority: tuple

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex"):
            raise InputError(f"unknown monomial order {self.kind!r}")
        if sorted(self.priority) != list(range(len(self.priority))):
            raise InputError("variable priority must be a permutation")

    @classmethod
    def grevlex(cls, nvars):
        return cls("grevlex", tuple(range(nvars)))

    @classmethod
    def lex(cls, nvars, priority=None):
        return cls("lex", tuple(range(nvars)) if priority is None else tuple(priority))

    def key(self, mono):
        """Sort key; a larger key means a larger monomial."""
        if self.kind == "lex":
            return tuple(mono[i] for i in self.priority)
        return (sum(mono), tuple(-mono[i] for i in reversed(self.priority)))


class MultiPoly:
    __slots__ = ("variables", "field", "_terms", "_hash")

    def __init__(self, variables: Sequence[str], terms=None, field=QQ):
        self.variables = tuple(variables)
        self.field = field
        n = len(self.variables)
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != n:
                raise InputError(f"monomial {mono} does not match {n} variables")
            if any(e < 0 for e in mono):
                raise InputError(f"negative exponent in {mono}")
            c = field(c)
            if c != 0:
                clean[mono] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, variables, terms, field):
        # trusted constructor: terms already clean
        p = cls.__new__(cls)
        p.variables = variables
        p.field = field
        p._terms = terms
        p._hash = None
        return p

    # construction helpers
    @classmethod
    def constant(cls, variables, c, field=QQ):
        return cls(variables, {(0,) * len(variables): c}, field)

    @classmethod
    def var(cls, variables, name, field=QQ):
        variables = tuple(variables)
        if name not in variables:
            raise InputError(f"unknown variable {name!r}")
        mono = tuple(int(v == name) for v in variables)
        return cls(variables, {mono: 1}, field)

    @property
    def terms(self):
        return dict(self._terms)

    @property
    def nvars(self):
        return len(self.variables)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(not any(m) for m in self._terms)

    def total_degree(self):
        return max((sum(m) for m in self._terms), default=-1)

    def _check(self, other):
        if not isinstance(other, MultiPoly):
            raise TypeError(f"cannot combine MultiPoly with {type(other).__name__}")
        if other.variables != self.variables:
            raise InputError(f"variable mismatch: {self.variables} vs {other.variables}")
        if other.field != self.field:
            raise InputError(f"scalar mismatch: {self.field} vs {other.field}")

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(self.variables, other, self.field)

    def __add__(self, other):
        other = self._coerce(other)
        F = self.field
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = F.add(out.get(m, F.zero), c)
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return MultiPoly._raw(self.variables, out, F)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return MultiPoly._raw(self.variables, {m: F.neg(c) for m, c in self._terms.items()}, F)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        F = self.field
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                s = F.add(out.get(m, F.zero), F.mul(c1, c2))
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        return MultiPoly._raw(self.variables, out, F)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise InputError("negative power of a polynomial")
        result = MultiPoly.constant(self.variables, 1, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c):
        F = self.field
        c = F(c)
        if c == 0:
            return MultiPoly._raw(self.variables, {}, F)
        return MultiPoly._raw(self.variables, {m: F.mul(a, c) for m, a in self._terms.items()}, F)

    def mul_term(self, mono, c):
        F = self.field
        return MultiPoly._raw(
            self.variables, {mono_mul(m, mono): F.mul(a, c) for m, a in self._terms.items()}, F
        )

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return (
                self.variables == other.variables
                and self.field == other.field
                and self._terms == other._terms
            )
        if isinstance(other, int):
            return self == MultiPoly.constant(self.variables, other, self.field)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, self.field, frozenset(self._terms.items())))
        return self._hash

    def diff(self, j: int) -> MultiPoly:
        """Formal partial derivative with respect to variable ``j``."""
        if not 0 <= j < self.nvars:
            raise InputError(f"variable index {j} out of range for {self.nvars} variables")
        F = self.field
        out = {}
        for m, c in self._terms.items():
            e = m[j]
            if e == 0:
                continue
            c2 = F.mul(c, F(e))
            if c2 == 0:
                continue
            m2 = m[:j] + (e - 1,) + m[j + 1 :]
            out[m2] = c2
        return MultiPoly._raw(self.variables, out, F)

    def sorted_terms(self, order=None):
        order = order or MonomialOrder.grevlex(self.nvars)
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_monomial(self, order):
        if not self._terms:
            raise InputError("zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order):
        return self._terms[self.leading_monomial(order)]

    def monic(self, order):
        if not self._terms:
            return self
        return self.scale(self.field.inv(self.leading_coefficient(order)))

    def format(self, order=None) -> str:
        """Canonical text: terms descending by ``order``, explicit ``*`` and ``^``."""
        if not self._terms:
            return "0"
        F = self.field
        pieces = []
        for m, c in self.sorted_terms(order):
            negative = F.characteristic == 0 and c < 0
            mag = F.neg(c) if negative else c
            factors = []
            for name, e in zip(self.variables, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                body = F.format(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = F.format(mag) + "*" + "*".join(factors)
            if not pieces:
                pieces.append(("-" if negative else "") + body)
            else:
                pieces.append(("- " if negative else "+ ") + body)
        return " ".join(pieces)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"MultiPoly({self.format()!r}, vars={','.join(self.variables)}, {self.field!r})"


@dataclass(frozen=True)
class PolyRing:
    """Convenience handle for building polynomials in fixed variables."""

    variables: tuple
    field: object = QQ

    def __init__(self, variables, field=QQ):
        if isinstance(variables, str):
            variables = [v.strip() for v in variables.split(",") if v.strip()]
        object.__setattr__(self, "variables", tuple(variables))
        object.__setattr__(self, "field", field)

    @property
    def gens(self):
        return tuple(MultiPoly.var(self.variables, v, self.field) for v in self.variables)

    def zero(self):
        return MultiPoly(self.variables, {}, self.field)

    def one(self):
        return MultiPoly.constant(self.variables, 1, self.field)

    def __call__(self, value):
        if isinstance(value, str):
            from .parsing import parse_poly

            return parse_poly(value, self.variables, self.field)
        return MultiPoly.constant(self.variables, value, self.field)


def poly_arith(f: MultiPoly, g: MultiPoly, kind: str) -> MultiPoly:
    f._check(g)
    if kind == "add":
        return f + g
    if kind == "sub":
        return f - g
    if kind == "mul":
        return f * g
    raise InputError(f"unknown arithmetic kind {kind!r}")


def partial_derivative(f: MultiPoly, j: int) -> MultiPoly:
    return f.diff(j)


# ---------------------------------------------------------------- reduction


def _reduce_terms(terms, basis, order, F):
    """Full multivariate division of ``terms`` by monic ``basis`` entries.

    ``basis`` holds ``(lm, terms)`` pairs with monic ``terms``.
    """
    p = dict(terms)
    rem = {}
    key = order.key
    while p:
        lm = max(p, key=key)
        c = p[lm]
        for g_lm, g in basis:
            if mono_divides(g_lm, lm):
                q = mono_div(lm, g_lm)
                for m, a in g.items():
                    mm = mono_mul(m, q)
                    s = F.sub(p.get(mm, F.zero), F.mul(c, a))
                    if s == 0:
                        p.pop(mm, None)
                    else:
                        p[mm] = s
                break
        else:
            rem[lm] = c
            del p[lm]
    return rem


def _monic_terms(terms, order, F):
    lm = max(terms, key=order.key)
    inv = F.inv(terms[lm])
    return lm, {m: F.mul(c, inv) for m, c in terms.items()}


def _spoly_terms(f_lm, f, g_lm, g, F):
    lcm = mono_lcm(f_lm, g_lm)
    qf = mono_div(lcm, f_lm)
    qg = mono_div(lcm, g_lm)
    out = {}
    for m, c in f.items():
        out[mono_mul(m, qf)] = c
    for m, c in g.items():
        mm = mono_mul(m, qg)
        s = F.sub(out.get(mm, F.zero), c)
        if s == 0:
            out.pop(mm, None)
        else:
            out[mm] = s
    return out


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced, monic Groebner basis sorted ascending by leading monomial."""

    order: MonomialOrder
    basis: tuple
    variables: tuple
    field: object = dc_field(default=QQ)

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.basis]

    def is_unit(self):
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def reduce(self, f: MultiPoly) -> MultiPoly:
        return normal_form(f, self)

    def contains(self, f: MultiPoly) -> bool:
        return normal_form(f, self).is_zero()

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def format(self):
        return [g.format(self.order) for g in self.basis]


def _validate_gens(gens):
    gens = list(gens)
    if not gens:
        return gens, None, None
    variables, field = gens[0].variables, gens[0].field
    for g in gens[1:]:
        gens[0]._check(g)
    return gens, variables, field


def groebner_basis(
    gens: Iterable[MultiPoly],
    order: MonomialOrder | None = None,
    *,
    variables=None,
    field=None,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    max_basis: int = DEFAULT_MAX_BASIS,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Raises :class:`BudgetExceeded` when more than ``max_pairs`` S-pairs are
    reduced or the intermediate basis grows past ``max_basis`` elements.
    """
    gens, v0, f0 = _validate_gens(gens)
    variables = v0 if v0 is not None else tuple(variables or ())
    F = f0 if f0 is not None else (field or QQ)
    if order is None:
        order = MonomialOrder.grevlex(len(variables))
    if len(order.priority) != len(variables):
        raise InputError("monomial order does not match the number of variables")

    # G: list of (lm, monic terms); None marks elements dropped later
    G = []
    pairs = set()
    done = 0

    def add(terms):
        lm, g = _monic_terms(terms, order, F)
        k = len(G)
        G.append((lm, g))
        if len(G) > max_basis:
            raise BudgetExceeded(f"basis exceeded {max_basis} elements")
        for i in range(k):
            if G[i] is not None:
                pairs.add((i, k))

    for g in gens:
        if g.is_zero():
            continue
        r = _reduce_terms(g._terms, [x for x in G if x is not None], order, F)
        if r:
            add(r)

    treated = set()
    while pairs:
        # normal strategy: smallest lcm first, ties broken by indices
        i, j = min(
            pairs,
            key=lambda p: (order.key(mono_lcm(G[p[0]][0], G[p[1]][0])), p),
        )
        pairs.discard((i, j))
        treated.add((i, j))
        lm_i, gi = G[i]
        lm_j, gj = G[j]
        lcm = mono_lcm(lm_i, lm_j)
        if mono_mul(lm_i, lm_j) == lcm:
            continue  # product criterion
        if _chain_skip(i, j, lcm, G, pairs):
            continue
        done += 1
        if done > max_pairs:
            raise BudgetExceeded(f"more than {max_pairs} S-pairs reduced")
        s = _spoly_terms(lm_i, gi, lm_j, gj, F)
        r = _reduce_terms(s, [x for x in G if x is not None], order, F)
        if r:
            add(r)
            if not any(r_m for r_m in max(r, key=order.key)):
                break  # reached a unit; the ideal is everything

    basis = _interreduce([x for x in G if x is not None], order, F)
    polys = tuple(MultiPoly._raw(variables, g, F) for _, g in basis)
    return GroebnerBasis(order, polys, tuple(variables), F)


def _chain_skip(i, j, lcm, G, pending):
    # Buchberger's second criterion: some g_k with lm_k | lcm(i, j) whose
    # pairs with both i and j are already handled.
    for k, entry in enumerate(G):
        if k in (i, j) or entry is None:
            continue
        if not mono_divides(entry[0], lcm):
            continue
        a = (min(i, k), max(i, k))
        b = (min(j, k), max(j, k))
        if a not in pending and b not in pending:
            return True
    return False


def _interreduce(G, order, F):
    key = order.key
    # minimalize: drop elements whose leading monomial is divisible by another's
    G = sorted(G, key=lambda x: key(x[0]))
    minimal = []
    for lm, g in G:
        if not any(mono_divides(m, lm) for m, _ in minimal):
            minimal.append((lm, g))
    if any(not any(lm) for lm, _ in minimal):
        n = len(minimal[0][0])
        return [((0,) * n, {(0,) * n: F.one})]
    reduced = []
    for idx, (lm, g) in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        tail = {m: c for m, c in g.items() if m != lm}
        r = _reduce_terms(tail, others, order, F)
        r[lm] = g[lm]
        reduced.append((lm, r))
    return reduced


def normal_form(f: MultiPoly, gb: GroebnerBasis) -> MultiPoly:
    """Remainder of ``f`` on division by ``gb``; zero iff ``f`` is in the ideal."""
    if f.variables != gb.variables or f.field != gb.field:
        raise InputError("polynomial and Groebner basis live in different rings")
    basis = [(g.leading_monomial(gb.order), g._terms) for g in gb.basis]
    rem = _reduce_terms(f._terms, basis, gb.order, f.field)
    return MultiPoly._raw(f.variables, rem, f.field)


def spoly(f: MultiPoly, g: MultiPoly, order: MonomialOrder) -> MultiPoly:
    f, g = f.monic(order), g.monic(order)
    t = _spoly_terms(
        f.leading_monomial(order), f._terms, g.leading_monomial(order), g._terms, f.field
    )
    return MultiPoly._raw(f.variables, t, f.field)


def s_pairs_reduce_to_zero(gb: GroebnerBasis) -> bool:
    """Buchberger's criterion checked on every pair of ``gb``."""
    for f, g in combinations(gb.basis, 2):
        if not normal_form(spoly(f, g, gb.order), gb).is_zero():
            return False
    return True


def is_unit_ideal(gens: Iterable[MultiPoly], **kwargs) -> bool:
    return groebner_basis(gens, **kwargs).is_unit()


def eliminate(gens: Iterable[MultiPoly], drop, **kwargs) -> list:
    """Generators of the ideal intersected with the subring without ``drop``.

    Uses lex with the dropped variables ranked highest. The returned
    polynomials live in the remaining variables and form a reduced lex
    Groebner basis there.
    """
    gens, variables, F = _validate_gens(gens)
    if variables is None:
        raise InputError("eliminate needs at least one generator")
    drop = set(drop)
    unknown = drop - set(variables)
    if unknown:
        raise InputError(f"unknown variables to eliminate: {sorted(unknown)}")
    if drop == set(variables):
        raise InputError("cannot eliminate every variable")
    dropped = [i for i, v in enumerate(variables) if v in drop]
    kept = [i for i, v in enumerate(variables) if v not in drop]
    order = MonomialOrder.lex(len(variables), dropped + kept)
    gb = groebner_basis(gens, order, **kwargs)
    new_vars = tuple(variables[i] for i in kept)
    out = []
    for g in gb.basis:
        if all(m[i] == 0 for m in g._terms for i in dropped):
            terms = {tuple(m[i] for i in kept): c for m, c in g._terms.items()}
            out.append(MultiPoly._raw(new_vars, terms, F))
    return out
