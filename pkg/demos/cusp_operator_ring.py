"""Differential operators on the cusp A = K[t^2, t^3].

Builds the graded pieces of D(A) inside the skew Laurent ring, checks a few
products by hand and shows why 1 lies in the two-sided ideal generated by x^2.
"""

from diffsimple import GradedOp, LaurentPoly, gcd_monic, semigroup, w

S = semigroup([2, 3])
print("semigroup", S, "gaps", S.gaps)

for i in range(-4, 5):
    print(f"w_{i:<3}", w(S, i).format())

x2 = GradedOp.x(2)
left = w(S, -2) * x2
right = x2 * w(S, -2)
print("w_-2 x^2 =", left.format())
print("x^2 w_-2 =", right.format())

# both products lie in D(A) x^2 D(A); their gcd is a unit
g = gcd_monic(left.component(0), right.component(0))
print("gcd =", g.format(), "so 1 is in the ideal generated by x^2")

# w_-2 pulls x^2 out of the maximal ideal of A
print("w_-2(x^2) =", w(S, -2).apply(LaurentPoly.monomial(2)).format())

# the generalized Weyl relation between w_3 and w_-3
print("w_-3 w_3 =", (w(S, -3) * w(S, 3)).format())
print("w_3 w_-3 =", (w(S, 3) * w(S, -3)).format())
