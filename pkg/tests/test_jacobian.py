import itertools

import pytest
import sympy

from diffsimple import (
    GF,
    QQ,
    AffinePresentation,
    InputError,
    groebner_basis,
    is_regular,
    jacobi_matrix,
    jacobian_ideal,
    nonsingular_minor_check,
    parse_poly,
    rank_and_minors,
)
from diffsimple.jacobian import higher_minors_vanish


def pres(ideal, variables="x,y", field=QQ, **kw):
    names = tuple(v for v in variables.split(","))
    gens = [parse_poly(s, names, field) for s in ideal.split(";")]
    return AffinePresentation.build(names, gens, field, **kw)


def polys(texts, variables="x,y", field=QQ):
    return [parse_poly(t, variables, field) for t in texts]


CUSP = "y^2 - x^3"
CIRCLE = "x^2 + y^2 - 1"
HYPERBOLA = "x*y - 1"

CORPUS = [
    (CUSP, "x,y"),
    (CIRCLE, "x,y"),
    (HYPERBOLA, "x,y"),
    ("x - y", "x,y"),
    ("x^2 - y*z;x*y - z^2", "x,y,z"),
    ("x^2 - y;x^3 - z", "x,y,z"),
    ("z^2 - x*y", "x,y,z"),
]


@pytest.mark.parametrize(
    "ideal, row",
    [(CUSP, ["-3*x^2", "2*y"]), (CIRCLE, ["2*x", "2*y"]), (HYPERBOLA, ["y", "x"])],
)
def test_jacobi_matrix(ideal, row):
    assert jacobi_matrix(pres(ideal)) == (tuple(polys(row)),)


def test_cusp_rank_and_minors():
    data = rank_and_minors(pres(CUSP))
    assert data.rank == 1
    assert data.minors == {((0,), (0,)): polys(["-3*x^2"])[0], ((0,), (1,)): polys(["2*y"])[0]}
    assert data.nonsingular_rows == ((0,),)
    assert data.nonsingular_cols == ((0,), (1,))


def test_line_rank_from_constant_entry():
    data = rank_and_minors(pres("x - y"))
    assert data.rank == 1
    assert jacobian_ideal(pres("x - y"), data) == polys(["1", "-1"])


def test_hyperbola_columns_nonsingular():
    data = rank_and_minors(pres(HYPERBOLA))
    assert data.rank == 1
    assert data.nonsingular_cols == ((0,), (1,))


def _monic(gens, p):
    return sorted(g.monic(p.gb.order).format() for g in gens)


def test_jacobian_ideal_generators_up_to_units():
    p = pres(CUSP)
    assert _monic(jacobian_ideal(p), p) == ["x^2", "y"]
    p = pres(CIRCLE)
    assert _monic(jacobian_ideal(p), p) == ["x", "y"]
    p = pres("x - y")
    assert _monic(jacobian_ideal(p), p) == ["1", "1"]


def test_cusp_is_not_regular():
    p = pres(CUSP)
    assert is_regular(p) is False
    gb = groebner_basis([p.gb.basis[0]] + jacobian_ideal(p))
    assert [g.format() for g in gb.basis] == ["y", "x^2"]


def test_circle_and_hyperbola_are_regular():
    assert is_regular(pres(CIRCLE)) is True
    assert is_regular(pres(HYPERBOLA)) is True


def test_characteristic_sensitivity():
    assert is_regular(pres(CIRCLE, field=GF(2))) is False
    assert is_regular(pres(CIRCLE, field=GF(3))) is True
    assert is_regular(pres(CIRCLE)) is True


def test_unit_ideal_presentation_rejected():
    with pytest.raises(InputError):
        pres("x;x - 1")


def test_zero_generator_rejected():
    with pytest.raises(InputError):
        AffinePresentation.build(("x",), polys(["0"], "x"), QQ)


def test_empty_presentation_has_unit_jacobian_ideal():
    p = AffinePresentation.build(("u",), [], QQ)
    data = rank_and_minors(p)
    assert data.rank == 0
    assert [g.format() for g in data.jacobian_ideal_gens] == ["1"]
    assert is_regular(p)


@pytest.mark.parametrize("ideal, variables", CORPUS)
def test_rank_is_exact_and_minors_match_tuples(ideal, variables):
    p = pres(ideal, variables)
    data = rank_and_minors(p)
    assert any(not d.is_zero() for d in data.minors.values())
    assert higher_minors_vanish(p, data)
    assert nonsingular_minor_check(data)


def test_one_row_presentations_match_tuples():
    for ideal in (CUSP, CIRCLE, HYPERBOLA, "x^5 - y^2"):
        assert nonsingular_minor_check(rank_and_minors(pres(ideal)))


def test_surface_minors_against_sympy_brute_force():
    p = pres("x^2 - y*z;x*y - z^2", "x,y,z")
    data = rank_and_minors(p)
    x, y, z = sympy.symbols("x y z")
    fs = [x**2 - y * z, x * y - z**2]
    G = sympy.groebner(fs, x, y, z, order="grevlex")
    J = sympy.Matrix([[sympy.diff(f, v) for v in (x, y, z)] for f in fs])
    expected_rank = 0
    for t in (1, 2):
        nonzero = [
            (r, c)
            for r in itertools.combinations(range(2), t)
            for c in itertools.combinations(range(3), t)
            if G.reduce(sympy.expand(J.extract(list(r), list(c)).det()))[1] != 0
        ]
        if nonzero:
            expected_rank = t
            expected_nonzero = set(nonzero)
    assert data.rank == expected_rank == 2
    ours = {k for k, d in data.minors.items() if not d.is_zero()}
    assert ours == expected_nonzero
    assert nonsingular_minor_check(data)


def test_jacobian_ideal_independent_of_generator_order():
    a = pres("x^2 - y;x^3 - z", "x,y,z")
    b = pres("x^3 - z;x^2 - y", "x,y,z")
    ia = groebner_basis(list(a.gb.basis) + jacobian_ideal(a))
    ib = groebner_basis(list(b.gb.basis) + jacobian_ideal(b))
    assert ia.basis == ib.basis


def test_vanishing_jacobi_matrix_is_flagged():
    # x^2 + y^2 + 1 = (x + y + 1)^2 over F_2
    p = pres(CIRCLE, field=GF(2))
    data = rank_and_minors(p)
    assert data.rank == 0 and data.degenerate
    assert data.jacobian_ideal_gens == ()
    assert nonsingular_minor_check(data)


def test_contract_alias():
    from diffsimple import lemma21_check

    assert lemma21_check is nonsingular_minor_check
