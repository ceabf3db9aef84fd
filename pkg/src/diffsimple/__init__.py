"""Exact computations with rings of differential operators.

Modules:

* ``poly`` -- multivariate polynomials over QQ or F_p, Groebner bases.
* ``jacobian`` -- Jacobi matrices, minors, Jacobian ideal, regularity.
* ``ore`` -- the skew Laurent ring K[h][x, x^-1; sigma] with h = x d/dx.
* ``semigroups`` -- numerical semigroup algebras and their operator rings.
* ``cli`` -- command line reports.
"""

from .errors import BudgetExceeded, InputError, NonMonomialMinor, ParseError
from .fields import GF, QQ
from .jacobian import (
    AffinePresentation,
    is_regular,
    jacobi_matrix,
    jacobian_ideal,
    lemma21_check,
    nonsingular_minor_check,
    rank_and_minors,
)
from .ore import (
    GradedOp,
    LaurentPoly,
    UniPoly,
    ad_nesting_depth,
    gcd_monic,
    op_apply,
    op_commutator,
    op_mul,
    op_order,
    shift_poly,
)
from .parsing import parse_op, parse_poly
from .poly import (
    GroebnerBasis,
    MonomialOrder,
    MultiPoly,
    PolyRing,
    eliminate,
    groebner_basis,
    is_unit_ideal,
    normal_form,
    partial_derivative,
    poly_arith,
)
from .semigroups import (
    SIdeal,
    closure_in_A,
    delta_vs_dop,
    der_pieces,
    dop_membership,
    dop_piece,
    ideal_component,
    is_der_stable,
    is_dop_stable,
    jacobian_ideal_monomial,
    meets_A,
    present_algebra,
    semigroup,
    simplicity_verdict,
    w,
)

__version__ = "0.1.0"
