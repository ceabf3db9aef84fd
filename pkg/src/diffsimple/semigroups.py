"""Numerical semigroups, their monomial curves and the graded ring D(A).

For a numerical semigroup S the algebra A = span{x^s : s in S} sits inside
K[x, x^-1], and D(A) is the set of operators of K[x, x^-1] mapping A into A.
That ring is graded by the power of x, and its degree-i piece is
``f_i(h) K[h] x^i`` with

    f_i(h) = prod over s in S with s + i not in S of (h - (s + i)).

Everything below (derivations, stability of monomial ideals, components of
two-sided ideals, simplicity certificates) is computed from these pieces.
All checks that quantify over infinitely many degrees are run inside
explicit windows and report those windows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import gcd

from .errors import InputError, NonMonomialMinor
from .fields import QQ
from .jacobian import AffinePresentation, jacobian_ideal, rank_and_minors
from .ore import GradedOp, LaurentPoly, UniPoly, gcd_monic
from .poly import MultiPoly, eliminate

UNIT_PROVEN = "UnitProven"
UPPER_BOUND_ONLY = "UpperBoundOnly"
SIMPLE_PROVEN = "SimpleProven"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple  # minimal generating set, ascending
    gaps: tuple
    frobenius: int
    conductor: int

    def __contains__(self, n):
        return n >= 0 and (n >= self.conductor or n not in self._gapset)

    @property
    def _gapset(self):
        return frozenset(self.gaps)

    @property
    def multiplicity(self):
        return self.generators[0]

    def is_natural_numbers(self):
        return self.conductor == 0

    def elements(self, upto):
        """Members of S in ``[0, upto]``."""
        return [n for n in range(upto + 1) if n in self]

    def __str__(self):
        return "<" + ",".join(map(str, self.generators)) + ">"


def semigroup(gens) -> NumericalSemigroup:
    gens = sorted({int(g) for g in gens})
    if not gens or gens[0] <= 0:
        raise InputError("generators must be positive integers")
    if reduce(gcd, gens) != 1:
        raise InputError(f"gcd of {gens} is not 1; the gap set would be infinite")
    m = gens[0]
    member = [True]
    run = 1
    # once m consecutive integers are members, every larger integer is one
    while run < m:
        n = len(member)
        ok = any(n - g >= 0 and member[n - g] for g in gens)
        member.append(ok)
        run = run + 1 if ok else 0
    gaps = tuple(n for n, ok in enumerate(member) if not ok)
    frob = gaps[-1] if gaps else -1

    def in_s(n):
        return n >= 0 and (n >= len(member) or member[n])

    minimal = tuple(
        g for g in gens if not any(in_s(s) and in_s(g - s) for s in range(1, g))
    )
    return NumericalSemigroup(minimal, gaps, frob, frob + 1)


# ------------------------------------------------------------ graded pieces


def dop_piece_roots(S: NumericalSemigroup, i: int) -> list:
    """Roots of f_i: the values s + i with s in S and s + i not in S."""
    # s + i >= conductor forces membership, so only s < conductor - i matter
    return [s + i for s in range(max(0, S.conductor - i)) if s in S and (s + i) not in S]


def dop_piece(S: NumericalSemigroup, i: int) -> UniPoly:
    """Monic f_i with D(A) in degree i equal to f_i(h) K[h] x^i."""
    return UniPoly.from_roots(dop_piece_roots(S, i))


def w(S: NumericalSemigroup, i: int) -> GradedOp:
    """The generator ``w_i = f_i(h) x^i`` of the degree-i piece of D(A)."""
    return GradedOp.homogeneous(dop_piece(S, i), i)


def w_table(S: NumericalSemigroup, lo: int, hi: int) -> dict:
    return {i: w(S, i) for i in range(lo, hi + 1)}


def dop_membership(S: NumericalSemigroup, u: GradedOp) -> bool:
    return all(dop_piece(S, i).divides(p) for i, p in u.components.items())


def maps_A_into_A(S: NumericalSemigroup, u: GradedOp) -> bool:
    """Direct check that ``u(x^s)`` lies in A for every relevant s in S.

    Beyond ``s = F + max|i|`` both s and s + i are in S, so the finite check
    is exhaustive.
    """
    if u.is_zero():
        return True
    span = max(abs(i) for i in u.components)
    for s in S.elements(S.conductor + span):
        image = u.apply(LaurentPoly.monomial(s))
        if any(n not in S for n in image.terms):
            return False
    return True


def _homogeneous_parts(u: GradedOp):
    if not u.is_homogeneous():
        raise InputError(f"operator {u} is not homogeneous")
    (d, p), = u.components.items()
    return d, p


# ------------------------------------------------------------ derivations


def der_degree_nonzero(S: NumericalSemigroup, i: int) -> bool:
    """Whether ``x^i h`` (the degree-i derivation of K[x, x^-1]) preserves A."""
    bound = S.conductor + abs(i) + 1
    return all((s + i) in S for s in S.elements(bound) if s != 0)


def der_pieces(S: NumericalSemigroup, lo: int, hi: int) -> list:
    """``(i, x^i h)`` for every degree i in ``[lo, hi]`` where Der_K(A) is nonzero."""
    out = []
    for i in range(lo, hi + 1):
        if der_degree_nonzero(S, i):
            out.append((i, GradedOp.x(i) * GradedOp.h()))
    return out


def der_degrees(S: NumericalSemigroup) -> list:
    """All degrees carrying a nonzero derivation, up to ``conductor``.

    Degrees above the conductor always qualify; degrees below ``-multiplicity``
    never do.
    """
    return [i for i in range(-S.multiplicity, S.conductor + 1) if der_degree_nonzero(S, i)]


@dataclass(frozen=True)
class DeltaWitness:
    operator: GradedOp
    reason: str


def delta_vs_dop(S: NumericalSemigroup) -> DeltaWitness | None:
    """A member of D(A) outside the derivation ring, or None when S = N."""
    if S.is_natural_numbers():
        return None
    # for S != N the degree -1 piece of Der_K(A) is zero (the multiplicity is at least 2)
    op = w(S, -1)
    reason = (
        "the derivation ring is generated by A and Der_K(A), all of nonnegative "
        f"x-degree (derivation degrees {der_degrees(S)} and every degree above "
        f"{S.conductor}), so it has no nonzero element of degree -1"
    )
    return DeltaWitness(op, reason)


def derivation_ring_generators(S: NumericalSemigroup) -> list:
    """Generators of the derivation ring: x^s for minimal s, h, and x^i h."""
    gens = [GradedOp.x(s) for s in S.generators]
    gens += [GradedOp.x(i) * GradedOp.h() for i in der_degrees(S)]
    return gens


@dataclass(frozen=True)
class DeltaIdealWitness:
    generators: tuple
    min_degree: int
    positive_element: GradedOp


def delta_positive_ideal(S: NumericalSemigroup) -> DeltaIdealWitness | None:
    """Evidence that the derivation ring is not simple when S != N.

    All generators have x-degree >= 0, so the positive-degree part is a
    two-sided ideal; it misses 1 and contains ``x^m`` for the multiplicity m.
    """
    if S.is_natural_numbers():
        return None
    gens = tuple(derivation_ring_generators(S))
    low = min(min(g.components) for g in gens)
    return DeltaIdealWitness(gens, low, GradedOp.x(S.multiplicity))


# ------------------------------------------------------------ monomial ideals


@dataclass(frozen=True)
class SIdeal:
    """Monomial ideal ``E = E_0 + S`` of A, stored by minimal exponents E_0."""

    parent: NumericalSemigroup
    generators: tuple

    @classmethod
    def generated_by(cls, S: NumericalSemigroup, exponents) -> SIdeal:
        exps = sorted({int(e) for e in exponents})
        for e in exps:
            if e not in S:
                raise InputError(f"exponent {e} is not in {S}")
        minimal = [e for e in exps if not any(e != g and (e - g) in S for g in exps)]
        return cls(S, tuple(minimal))

    @classmethod
    def maximal(cls, S: NumericalSemigroup) -> SIdeal:
        return cls.generated_by(S, S.generators)

    def __contains__(self, e):
        return any((e - g) in self.parent for g in self.generators)

    def is_unit(self):
        return 0 in self.generators

    def is_zero(self):
        return not self.generators

    def bound(self):
        """Every exponent at or above this lies in E."""
        if not self.generators:
            raise InputError("the zero ideal has no bound")
        return self.generators[0] + self.parent.conductor

    def elements(self, upto):
        return [n for n in range(upto + 1) if n in self]

    def to_list(self):
        return list(self.generators)

    def __str__(self):
        return "{" + ",".join(map(str, self.generators)) + "}+S"


@dataclass(frozen=True)
class Witness:
    degree: int
    exponent: int
    value: object
    image_exponent: int


@dataclass(frozen=True)
class StabilityVerdict:
    stable: bool
    witness: Witness | None = None


def is_der_stable(S: NumericalSemigroup, E: SIdeal) -> StabilityVerdict:
    """Stability of E under every K-derivation of A.

    ``x^i h`` sends ``x^e`` to ``e x^(e+i)``; a failure needs e + i below
    ``E.bound()`` and i >= -multiplicity, which bounds the scan.
    """
    if E.is_zero() or E.is_unit():
        return StabilityVerdict(True)
    degrees = der_degrees(S)
    for e in E.elements(E.bound() + S.multiplicity):
        if e == 0:
            continue
        for i in degrees:
            if (e + i) not in E:
                return StabilityVerdict(False, Witness(i, e, e, e + i))
    return StabilityVerdict(True)


def is_dop_stable(S: NumericalSemigroup, E: SIdeal) -> StabilityVerdict:
    """Stability of E under all of D(A).

    The degree-i piece can move ``x^e`` to ``x^(e+i)`` iff ``f_i(e+i) != 0``.
    Any failure already occurs at the least element of E, so the window
    ``e <= E.bound() + conductor`` with ``-e <= i <= conductor`` is exhaustive.
    """
    if E.is_zero() or E.is_unit():
        return StabilityVerdict(True)
    c = S.conductor
    for e in E.elements(E.bound() + c):
        for i in range(-e, c + 1):
            if (e + i) in E:
                continue
            value = dop_piece(S, i)(e + i)
            if value != 0:
                return StabilityVerdict(False, Witness(i, e, value, e + i))
    return StabilityVerdict(True)


# ------------------------------------------------------------ two-sided ideals


@dataclass(frozen=True)
class ComponentResult:
    degree: int
    gcd: UniPoly
    status: str
    shift_window: tuple
    generators_examined: int = 0

    @property
    def unit(self):
        return self.status == UNIT_PROVEN


def component_generators(S, d, p, t, indices):
    """K[h]-generators ``G_i = f_i(h) p(h - i) f_(t-i-d)(h - i - d)`` of degree t."""
    for i in indices:
        yield i, dop_piece(S, i) * p.shift(i) * dop_piece(S, t - i - d).shift(i + d)


def _gcd_of(polys):
    g = UniPoly()
    for q in polys:
        g = gcd_monic(g, q) if not (g.is_zero() and q.is_zero()) else g
        if g.is_one():
            break
    return g


def ideal_component(S: NumericalSemigroup, u: GradedOp, t: int, B: int) -> ComponentResult:
    """Degree-t part of the two-sided ideal D(A) u D(A), from shifts in [-B, B].

    The true component is the K[h]-ideal generated by all G_i, i in Z. The
    gcd over the window is an upper bound for it; gcd 1 is a proof that
    ``x^t`` lies in the ideal.
    """
    d, p = _homogeneous_parts(u)
    if not dop_membership(S, u):
        raise InputError(f"{u.format()} is not in D(A) for {S}")
    gens = [g for _, g in component_generators(S, d, p, t, range(-B, B + 1))]
    g = _gcd_of(gens)
    status = UNIT_PROVEN if g.is_one() else UPPER_BOUND_ONLY
    return ComponentResult(t, g, status, (-B, B), len(gens))


@dataclass(frozen=True)
class MeetsAWitness:
    degree: int
    component: ComponentResult


def meets_A(S: NumericalSemigroup, u: GradedOp, t_range, B: int) -> MeetsAWitness | None:
    """Least t in ``t_range`` with x^t proven to lie in D(A) u D(A)."""
    if u.is_zero():
        raise InputError("meets_A needs a nonzero operator")
    for t in t_range:
        if t not in S:
            continue  # components outside S never contain x^t
        res = ideal_component(S, u, t, B)
        if res.unit:
            return MeetsAWitness(t, res)
    return None


STRICTLY_LARGER = "strictly_larger"
EQUALS_E = "equals_E"
CLOSURE_INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ClosureResult:
    outcome: str
    witness: int | None
    component: ComponentResult | None
    bounds: dict = field(default_factory=dict)


def closure_in_A(S: NumericalSemigroup, E: SIdeal, t_max: int | None = None, B: int | None = None):
    """Compare ``D(A) E D(A) intersected with A`` against E.

    Only degrees t in S minus E are scanned; a unit gcd at any of them shows
    the closure is strictly larger. Failing to find one is inconclusive.
    """
    if E.is_zero():
        raise InputError("closure_in_A needs a nonzero ideal")
    if t_max is None:
        t_max = E.bound()
    if B is None:
        B = default_shift_bound(S, max(E.generators))
    bounds = {"t_max": t_max, "shift_bound": B}
    candidates = [t for t in S.elements(t_max) if t not in E]
    if not candidates and E.is_unit():
        return ClosureResult(EQUALS_E, None, None, bounds)
    for t in candidates:
        gens = []
        for e in E.generators:
            gens += [g for _, g in component_generators(S, e, UniPoly.constant(1), t, range(-B, B + 1))]
        g = _gcd_of(gens)
        if g.is_one():
            comp = ComponentResult(t, g, UNIT_PROVEN, (-B, B), len(gens))
            return ClosureResult(STRICTLY_LARGER, t, comp, bounds)
    return ClosureResult(CLOSURE_INCONCLUSIVE, None, None, bounds)


# ------------------------------------------------------------ presentations


def _variable_names(n):
    if n <= 3:
        return ("u", "v", "w")[:n]
    return tuple(f"y{k}" for k in range(1, n + 1))


def present_algebra(S: NumericalSemigroup, **budget) -> AffinePresentation:
    """``K[S] = K[y_1..y_n] / I`` with ``y_k -> t^(g_k)`` and I the toric kernel."""
    names = _variable_names(len(S.generators))
    ring_vars = ("t",) + names
    t = MultiPoly.var(ring_vars, "t")
    graph = [t ** g - MultiPoly.var(ring_vars, v) for g, v in zip(S.generators, names)]
    relations = eliminate(graph, {"t"}, **budget)
    degree_map = dict(zip(names, S.generators))
    return AffinePresentation.build(names, relations, QQ, degree_map=degree_map, **budget)


def t_degree(pres: AffinePresentation, mono) -> int:
    return sum(e * pres.degree_map[v] for v, e in zip(pres.variables, mono))


def jacobian_ideal_monomial(S: NumericalSemigroup, pres: AffinePresentation | None = None) -> SIdeal:
    """The Jacobian ideal of K[S], read back as a monomial ideal of S."""
    pres = pres or present_algebra(S)
    data = rank_and_minors(pres)
    exps = []
    for g in jacobian_ideal(pres, data):
        terms = g.terms
        if len(terms) != 1:
            raise NonMonomialMinor(f"minor {g} is not a single monomial modulo the toric ideal")
        (mono,) = terms
        exps.append(t_degree(pres, mono))
    return SIdeal.generated_by(S, exps)


# ------------------------------------------------------------ simplicity


def default_shift_bound(S: NumericalSemigroup, max_degree: int = 0) -> int:
    return 2 * (S.frobenius + abs(max_degree) + 4)


@dataclass(frozen=True)
class Certificate:
    power: int
    exponent: int
    left: UniPoly
    right: UniPoly
    gcd: UniPoly
    roots_disjoint: bool
    component: ComponentResult
    reduction: str


@dataclass(frozen=True)
class SimplicityVerdict:
    outcome: str
    certificates: tuple
    jacobian_ideal: SIdeal
    bounds: dict


def roots_disjoint(S: NumericalSemigroup, d: int) -> bool:
    """Roots of ``f_(-d)(h)`` avoid S while those of ``f_(-d)(h - d)`` lie in S."""
    roots = dop_piece_roots(S, -d)
    left_ok = all(r not in S for r in roots)
    right_ok = all((r + d) in S for r in roots)
    return left_ok and right_ok and not set(roots) & {r + d for r in roots}


def simplicity_verdict(S: NumericalSemigroup, k_max: int = 5, B: int | None = None) -> SimplicityVerdict:
    """Bounded simplicity evidence for D(A) through the Jacobian ideal.

    For each k the two-sided ideal generated by ``x^(k c)``, c the least
    exponent of the Jacobian ideal, must contain 1. The pair
    ``(f_(-d)(h), f_(-d)(h - d))`` with d = k c consists of genuine degree-0
    generators, so their gcd being 1 settles that k. The shift window is
    widened to cover the pair when d exceeds B.
    """
    E = jacobian_ideal_monomial(S)
    if B is None:
        B = default_shift_bound(S)
    c = E.generators[0]
    certs = []
    ok = True
    for k in range(1, k_max + 1):
        d = k * c
        left = dop_piece(S, -d)
        right = left.shift(d)
        g = gcd_monic(left, right)
        comp = ideal_component(S, GradedOp.x(d), 0, max(B, d))
        disjoint = roots_disjoint(S, d)
        reduction = f"x^{c} in a_r, so x^{d} = (x^{c})^{k} lies in a_r^{k}"
        certs.append(Certificate(k, d, left, right, g, disjoint, comp, reduction))
        ok = ok and g.is_one() and comp.unit and disjoint
    outcome = SIMPLE_PROVEN if ok else INCONCLUSIVE
    bounds = {"k_max": k_max, "shift_bound": B}
    return SimplicityVerdict(outcome, tuple(certs), E, bounds)
