"""Jacobi matrices, their rank over Frac(A), minors and the Jacobian ideal.

Everything is computed for an affine presentation ``A = P_n / I`` and reduced
modulo ``I`` through a Groebner basis. ``I`` is assumed prime; that is taken
on trust and never checked.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations

from .errors import InputError
from .fields import QQ
from .poly import (
    DEFAULT_MAX_BASIS,
    DEFAULT_MAX_PAIRS,
    GroebnerBasis,
    MultiPoly,
    groebner_basis,
    is_unit_ideal,
    normal_form,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AffinePresentation:
    variables: tuple
    generators: tuple
    field: object
    gb: GroebnerBasis
    assumed_prime: bool = True
    degree_map: dict | None = None

    @classmethod
    def build(
        cls,
        variables,
        generators,
        field=QQ,
        *,
        assumed_prime=True,
        degree_map=None,
        max_pairs=DEFAULT_MAX_PAIRS,
        max_basis=DEFAULT_MAX_BASIS,
    ):
        variables = tuple(variables)
        gens = tuple(generators)
        for g in gens:
            if g.variables != variables:
                raise InputError(f"generator {g} is not in variables {variables}")
            if g.field != field:
                raise InputError(f"generator {g} is over {g.field}, expected {field}")
            if g.is_zero():
                raise InputError("zero generator in presentation")
        gb = groebner_basis(
            gens, variables=variables, field=field, max_pairs=max_pairs, max_basis=max_basis
        )
        if gb.is_unit():
            raise InputError("the generators span the unit ideal; the quotient is zero")
        return cls(variables, gens, field, gb, assumed_prime, degree_map)

    @property
    def n(self):
        return len(self.variables)

    @property
    def m(self):
        return len(self.generators)

    def reduce(self, f: MultiPoly) -> MultiPoly:
        return normal_form(f, self.gb)

    def one(self):
        return MultiPoly.constant(self.variables, 1, self.field)

    def is_zero_ideal(self):
        return len(self.gb) == 0


@dataclass(frozen=True)
class JacobiData:
    matrix: tuple
    rank: int
    minors: dict = field(repr=False)
    nonsingular_rows: tuple
    nonsingular_cols: tuple
    jacobian_ideal_gens: tuple
    degenerate: bool = False


def jacobi_matrix(pres: AffinePresentation):
    """``J-bar``: entry (i, j) is d f_i / d x_j reduced modulo I."""
    return tuple(
        tuple(pres.reduce(f.diff(j)) for j in range(pres.n)) for f in pres.generators
    )


def _det(mat, one):
    # Laplace expansion along the first row; matrices here are tiny
    k = len(mat)
    if k == 0:
        return one
    if k == 1:
        return mat[0][0]
    total = one - one
    for col in range(k):
        entry = mat[0][col]
        if entry.is_zero():
            continue
        sub = [row[:col] + row[col + 1 :] for row in mat[1:]]
        term = entry * _det(sub, one)
        total = total + term if col % 2 == 0 else total - term
    return total


def minor(pres: AffinePresentation, matrix, rows, cols) -> MultiPoly:
    sub = [[matrix[i][j] for j in cols] for i in rows]
    return pres.reduce(_det(sub, pres.one()))


def _tuples(count, size):
    return list(combinations(range(count), size))


def rank_and_minors(pres: AffinePresentation, matrix=None) -> JacobiData:
    """Rank of ``J-bar`` over Frac(A) and the full table of r x r minors.

    The rank is the largest t with a t x t minor nonzero in A. This relies on
    A being a domain, so that nonzero in A means nonzero in Frac(A).
    """
    if matrix is None:
        matrix = jacobi_matrix(pres)
    m, n = pres.m, pres.n
    rank = 0
    for t in range(1, min(m, n) + 1):
        found = any(
            not minor(pres, matrix, rows, cols).is_zero()
            for rows in _tuples(m, t)
            for cols in _tuples(n, t)
        )
        if not found:
            break
        rank = t
    # A nonzero ideal whose partials all vanish mod I is never a prime of a
    # regular ring over a perfect field (rank 0 < codim); the codim-size minors
    # are then all zero, so the table is kept at size 1 and a_r is zero.
    degenerate = rank == 0 and not pres.is_zero_ideal()
    size = 1 if degenerate else rank
    minors = {}
    for rows in _tuples(m, size):
        for cols in _tuples(n, size):
            minors[(rows, cols)] = minor(pres, matrix, rows, cols)
    if degenerate:
        logger.warning("Jacobi matrix vanishes modulo a nonzero ideal; the ideal cannot be prime here")
    nonzero = [(key, d) for key, d in minors.items() if not d.is_zero()]
    rows_ns = tuple(sorted({key[0] for key, _ in nonzero}))
    cols_ns = tuple(sorted({key[1] for key, _ in nonzero}))
    gens = tuple(d for _, d in sorted(nonzero, key=lambda kv: kv[0]))
    if not pres.assumed_prime:
        logger.warning("ideal not asserted prime; rank is computed with the domain zero-test anyway")
    return JacobiData(matrix, rank, minors, rows_ns, cols_ns, gens, degenerate)


def jacobian_ideal(pres: AffinePresentation, data: JacobiData | None = None):
    """Nonzero r x r minors of ``J-bar``; together they generate a_r."""
    data = data or rank_and_minors(pres)
    return list(data.jacobian_ideal_gens)


def is_regular(pres: AffinePresentation, data: JacobiData | None = None, **budget) -> bool:
    """Jacobian criterion: A is regular iff 1 lies in I + (r x r minors)."""
    data = data or rank_and_minors(pres)
    gens = list(pres.gb.basis) + list(data.jacobian_ideal_gens)
    return is_unit_ideal(gens, variables=pres.variables, field=pres.field, **budget)


def nonsingular_minor_check(data: JacobiData) -> bool:
    """Check that a minor is nonzero exactly when its row and column tuples are non-singular."""
    rows, cols = set(data.nonsingular_rows), set(data.nonsingular_cols)
    return all(
        (not d.is_zero()) == (key[0] in rows and key[1] in cols)
        for key, d in data.minors.items()
    )


# name kept for callers that use the original contract
lemma21_check = nonsingular_minor_check


def higher_minors_vanish(pres: AffinePresentation, data: JacobiData) -> bool:
    """Every (r+1) x (r+1) minor is zero in A."""
    t = data.rank + 1
    if data.degenerate:
        return True
    return all(
        minor(pres, data.matrix, rows, cols).is_zero()
        for rows in _tuples(pres.m, t)
        for cols in _tuples(pres.n, t)
    )


def tuple_label(t):
    """1-based rendering of an index tuple, e.g. ``(0, 2) -> "(1,3)"``."""
    return "(" + ",".join(str(i + 1) for i in t) + ")"
