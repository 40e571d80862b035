"""
Resultants as the referee for the corner eliminations
=====================================================

The solver's reduction to a biquadratic rests on a handful of
polynomial identities.  This script fires random tuples at them, and
shows the resultant machinery that independently confirms when two
specialized quadratics share a root.
"""

from c4repeats import (
    Poly,
    poly_gcd,
    resultant,
    resultant_euclid,
    sylvester_matrix,
    verify_elimination_identities,
)

# random-fire certification of the identities behind the solver
report = verify_elimination_identities(23, trials=5000, seed=1)
print("p = 23, trials:", report.trials)
print("generic branch:", report.generic, " degenerate branch:", report.degenerate)
print("identity failures:", len(report.identity_failures))
print("resultant cross-checks:", report.resultant_pairs,
      " failures:", len(report.resultant_failures))
print("passed:", report.passed)

# the Sylvester matrix of two linear polynomials, by hand size
p = 7
f = Poly([-2, 1], p)  # x - 2
g = Poly([-3, 1], p)  # x - 3
print()
print("Sylvester matrix of x - 2 and x - 3 over F_7:")
for row in sylvester_matrix(f, g):
    print(" ", row)
print("resultant:", resultant(f, g), "(-1 mod 7: distinct roots)")

# sharing a root collapses the resultant to zero
h = Poly([-1, 0, 1], 11) * Poly([4, 1], 11)   # (x^2 - 1)(x + 4)
k = Poly([-1, 1], 11) * Poly([2, 3, 1], 11)   # (x - 1)(x^2 + 3x + 2)
print()
print("common factor degree:", poly_gcd(h, k).degree())
print("resultant:", resultant(h, k))

# the determinant route and the Euclidean route always agree
import random

rng = random.Random(0)
agree = all(
    resultant(a, b) == resultant_euclid(a, b)
    for a, b in (
        (
            Poly([rng.randrange(11) for _ in range(4)] + [1], 11),
            Poly([rng.randrange(11) for _ in range(3)] + [1], 11),
        )
        for _ in range(200)
    )
)
print()
print("determinant route == Euclid route on 200 random pairs:", agree)
