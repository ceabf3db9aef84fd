"""The nine acceptance criteria, each at exact equality.

Every criterion prints a single PASS/FAIL line with its wall time. Run with
``pytest tests/test_acceptance.py -s`` or ``python tests/test_acceptance.py``;
under plain ``pytest`` the lines are repeated in the terminal summary.
"""

import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from diffsimple import (  # noqa: E402
    GF,
    QQ,
    AffinePresentation,
    GradedOp,
    MonomialOrder,
    MultiPoly,
    SIdeal,
    UniPoly,
    closure_in_A,
    delta_vs_dop,
    der_pieces,
    dop_membership,
    dop_piece,
    gcd_monic,
    groebner_basis,
    is_der_stable,
    is_dop_stable,
    is_regular,
    jacobian_ideal_monomial,
    lemma21_check,
    meets_A,
    normal_form,
    parse_poly,
    present_algebra,
    rank_and_minors,
    semigroup,
    shift_poly,
    simplicity_verdict,
    w,
)
from diffsimple.cli import run  # noqa: E402
from diffsimple.ore import ad_nesting_depth  # noqa: E402
from diffsimple.poly import s_pairs_reduce_to_zero  # noqa: E402
from diffsimple.semigroups import SIMPLE_PROVEN, STRICTLY_LARGER, roots_disjoint  # noqa: E402

RESULTS = {}

CUSP = semigroup([2, 3])
LINE = semigroup([1])


def roots(*rs):
    return UniPoly.from_roots(rs)


def hom(p, i):
    return GradedOp.homogeneous(p, i)


def x(i):
    return GradedOp.x(i)


def record(number, title, budget):
    """Run the criterion, print its line, and fail loudly on a miss."""

    def wrap(fn):
        def test():
            start = time.perf_counter()
            err = None
            try:
                fn()
            except AssertionError as exc:
                err = exc
            elapsed = time.perf_counter() - start
            ok = err is None and elapsed < budget
            why = "" if err is None else f" ({err})"
            if err is None and not ok:
                why = f" (over the {budget}s budget)"
            line = f"criterion {number} [{title}]: {'PASS' if ok else 'FAIL'} in {elapsed:.2f}s{why}"
            RESULTS[number] = line
            print(line)
            assert ok, line

        test.__name__ = fn.__name__
        return test

    return wrap


def cusp_negative(i):
    # (h-1)(h+1)...(h+i-2)(h+i) x^-i for i >= 3
    return hom(roots(1, *range(-1, -(i - 2) - 1, -1), -i), -i)


# ---------------------------------------------------------------- 1


@record(1, "cusp w-table", 1.0)
def test_criterion_1_cusp_w_table():
    out = run(["semigroup", "--gens", "2,3", "pieces", "--degrees", "-6..6"])
    assert out.exit_code == 0
    table = out.report["result"]["pieces"]
    expected = {0: GradedOp.scalar(1), 1: hom(roots(1), 1), -1: hom(roots(-1, 1), -1), -2: hom(roots(-2, 1), -2)}
    expected.update({i: x(i) for i in range(2, 7)})
    expected.update({-i: cusp_negative(i) for i in range(3, 7)})
    for i in range(-6, 7):
        assert w(CUSP, i) == expected[i], i
        assert table[str(i)] == expected[i].format(), i


# ---------------------------------------------------------------- 2


def cusp_pairs():
    """``(w_-i x^i, x^i w_-i)`` with their stated closed forms, i = 2..6."""
    pairs = [(2, roots(-2, 1), roots(0, 3))]
    for i in range(3, 7):
        left_roots = (1, *range(-1, -(i - 2) - 1, -1), -i)
        # x^i w_-i = (h-i-1)(h-i+1)...(h-2)h, the left roots moved up by i
        left, right = roots(*left_roots), roots(*(r + i for r in left_roots))
        pairs.append((i, left, right))
    return pairs


@record(2, "product identities", 1.0)
def test_criterion_2_products():
    for i, left, right in cusp_pairs():
        assert w(CUSP, -i) * x(i) == hom(left, 0), i
        assert x(i) * w(CUSP, -i) == hom(right, 0), i
    # the stated shape of x^i w_-i, written out for i = 3..6
    assert x(3) * w(CUSP, -3) == hom(roots(4, 2, 0), 0)
    assert x(4) * w(CUSP, -4) == hom(roots(5, 3, 2, 0), 0)
    assert x(5) * w(CUSP, -5) == hom(roots(6, 4, 3, 2, 0), 0)
    assert x(6) * w(CUSP, -6) == hom(roots(7, 5, 4, 3, 2, 0), 0)


# ---------------------------------------------------------------- 3


@record(3, "coprimality certificates and simplicity", 2.0)
def test_criterion_3_coprime():
    for i, left, right in cusp_pairs():
        assert gcd_monic(left, right).is_one(), i
    v = simplicity_verdict(CUSP, k_max=5, B=8)
    assert v.outcome == SIMPLE_PROVEN
    assert all(c.gcd.is_one() and c.component.unit for c in v.certificates)


# ---------------------------------------------------------------- 4


@record(4, "w-relations and generalized Weyl relation", 1.0)
def test_criterion_4_relations():
    for i in (1, 2, 3):
        assert w(CUSP, -2 * i) == w(CUSP, -2) ** i
        assert w(CUSP, -3 - 2 * i) == w(CUSP, -3) * w(CUSP, -2) ** i
    a = roots(-3, -1, 1)
    assert w(CUSP, -3) * w(CUSP, 3) == hom(a, 0)
    assert w(CUSP, 3) * w(CUSP, -3) == hom(shift_poly(a, 3), 0)


# ---------------------------------------------------------------- 5


@record(5, "derivations and the derivation ring", 1.0)
def test_criterion_5_derivations():
    pieces = der_pieces(CUSP, -10, 10)
    assert [i for i, _ in pieces] == list(range(0, 11))
    for i, u in pieces:
        assert u == x(i) * GradedOp.h()
    assert delta_vs_dop(CUSP).operator == hom(roots(-1, 1), -1)
    assert delta_vs_dop(LINE) is None


# ---------------------------------------------------------------- 6


@record(6, "stability of the maximal and Jacobian ideals", 1.0)
def test_criterion_6_stability():
    m = SIdeal.maximal(CUSP)
    assert is_der_stable(CUSP, m).stable
    v = is_dop_stable(CUSP, m)
    assert not v.stable and (v.witness.exponent, v.witness.value) == (2, -2)
    E = jacobian_ideal_monomial(CUSP)
    assert E.generators == (3, 4)
    assert is_der_stable(CUSP, E).stable
    v = is_dop_stable(CUSP, E)
    assert not v.stable and (v.witness.exponent, v.witness.value) == (3, -3)
    out = run(["semigroup", "--gens", "2,3", "stable"])
    assert any("{3,4}+S" in msg and "x^2" in msg for msg in out.report["warnings"])


# ---------------------------------------------------------------- 7


def _pres(text, field=QQ):
    return AffinePresentation.build(("x", "y"), [parse_poly(text, "x,y", field)], field)


@record(7, "Jacobian pipeline", 5.0)
def test_criterion_7_jacobian():
    cusp = _pres("y^2 - x^3")
    data = rank_and_minors(cusp)
    assert data.rank == 1 and lemma21_check(data)
    assert is_regular(cusp, data) is False
    assert is_regular(_pres("x^2 + y^2 - 1")) is True
    assert is_regular(_pres("x*y - 1")) is True
    assert is_regular(_pres("x^2 + y^2 - 1", GF(2))) is False
    assert list(present_algebra(CUSP).gb.basis) == [parse_poly("u^3 - v^2", "u,v")]
    assert jacobian_ideal_monomial(CUSP) == SIdeal.generated_by(CUSP, [3, 4])


# ---------------------------------------------------------------- 8


def _random_member(rng):
    while True:
        d = rng.randint(-4, 4)
        f = dop_piece(CUSP, d)
        if f.degree() <= 3:
            break
    q = UniPoly([rng.randint(-3, 3) for _ in range(rng.randint(1, 4 - f.degree()))])
    if q.is_zero():
        q = UniPoly.constant(1)
    return hom(q * f, d)


@record(8, "two-sided ideals meet A; closures exceed E", 20.0)
def test_criterion_8_ideals():
    rng = random.Random(20)
    for _ in range(20):
        u = _random_member(rng)
        assert dop_membership(CUSP, u) and u.order() <= 3
        assert meets_A(CUSP, u, range(0, 13), 12) is not None, u.format()
    # every proper nonzero monomial ideal with generators <= 8
    exps = CUSP.elements(8)[1:]
    seen = set()
    for mask in range(1, 1 << len(exps)):
        E = SIdeal.generated_by(CUSP, [e for k, e in enumerate(exps) if mask >> k & 1])
        if E.generators in seen:
            continue
        seen.add(E.generators)
        assert closure_in_A(CUSP, E).outcome == STRICTLY_LARGER, str(E)
    assert len(seen) > 10


# ---------------------------------------------------------------- 9


def _random_poly(rng, names=("x", "y")):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        mono = tuple(rng.randint(0, 3) for _ in names)
        terms[mono] = rng.randint(-3, 3)
    return MultiPoly(names, terms)


def _random_op(rng):
    comps = {}
    for _ in range(rng.randint(1, 3)):
        comps[rng.randint(-4, 4)] = UniPoly([rng.randint(-3, 3) for _ in range(rng.randint(1, 4))])
    return GradedOp(comps)


@record(9, "infrastructure properties", 30.0)
def test_criterion_9_infrastructure():
    rng = random.Random(9)
    for _ in range(25):
        gens = [g for g in (_random_poly(rng) for _ in range(rng.randint(1, 3))) if not g.is_zero()]
        if not gens:
            continue
        gb = groebner_basis(gens)
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert groebner_basis(shuffled).basis == gb.basis
        assert groebner_basis(gens, MonomialOrder.lex(2)).basis == groebner_basis(
            shuffled, MonomialOrder.lex(2)
        ).basis
        assert s_pairs_reduce_to_zero(gb)
        f = _random_poly(rng)
        nf = normal_form(f, gb)
        assert normal_form(nf, gb) == nf
    for _ in range(40):
        u, v, z = _random_op(rng), _random_op(rng), _random_op(rng)
        assert (u * v) * z == u * (v * z)
        assert u * (v + z) == u * v + u * z
        assert GradedOp.scalar(1) * u == u == u * GradedOp.scalar(1)
        if not u.is_zero():
            assert ad_nesting_depth(u, rng.randint(1, 3)) == u.order()
    for gens in ([2, 3], [2, 5], [3, 4, 5], [3, 5]):
        S = semigroup(gens)
        for i in range(1, 9):
            assert roots_disjoint(S, i), (gens, i)
            assert gcd_monic(dop_piece(S, -i), shift_poly(dop_piece(S, -i), i)).is_one()


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
