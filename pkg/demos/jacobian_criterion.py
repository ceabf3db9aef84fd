"""Regularity by the Jacobian criterion for a few plane curves."""

from diffsimple import GF, QQ, AffinePresentation, is_regular, parse_poly, rank_and_minors

curves = [
    ("cusp", "y^2 - x^3", QQ),
    ("circle", "x^2 + y^2 - 1", QQ),
    ("hyperbola", "x*y - 1", QQ),
    ("circle mod 3", "x^2 + y^2 - 1", GF(3)),
    ("circle mod 2", "x^2 + y^2 - 1", GF(2)),
]

for name, text, field in curves:
    pres = AffinePresentation.build(("x", "y"), [parse_poly(text, "x,y", field)], field)
    data = rank_and_minors(pres)
    minors = [d.format() for d in data.jacobian_ideal_gens]
    print(f"{name:13} rank {data.rank}  minors {minors}  regular {is_regular(pres, data)}")

# In characteristic 2 the circle is (x + y + 1)^2, every partial vanishes,
# and the quotient is not even reduced.
