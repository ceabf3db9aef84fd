"""Simplicity certificates for rings of operators on monomial curves.

Each certificate is a pair f(h), f(h - d) of degree-0 elements in the ideal
generated by x^d. Printing their roots shows why they are coprime: the first
set avoids S and the second lies inside it.
"""

from diffsimple import is_der_stable, is_dop_stable, jacobian_ideal_monomial, semigroup, simplicity_verdict
from diffsimple.semigroups import dop_piece_roots

for gens in ([2, 3], [2, 5], [3, 4, 5], [3, 5]):
    S = semigroup(gens)
    E = jacobian_ideal_monomial(S)
    verdict = simplicity_verdict(S, k_max=3)
    print(f"S = {S}: Jacobian ideal {E}, verdict {verdict.outcome}")
    print(f"    derivation-stable {is_der_stable(S, E).stable}, D(A)-stable {is_dop_stable(S, E).stable}")
    for cert in verdict.certificates:
        d = cert.exponent
        left = sorted(dop_piece_roots(S, -d))
        right = sorted(r + d for r in left)
        print(f"    x^{d}: roots {left} vs {right}, gcd {cert.gcd.format()}")
    wit = is_dop_stable(S, E).witness
    if wit is not None:
        print(f"    degree {wit.degree} piece sends x^{wit.exponent} to {wit.value}*x^{wit.image_exponent}")
