"""
From four colors back to the cycles that carry them
===================================================

Given an ordered color quadruple (a, b, c, d), the solver eliminates
two corners, reduces the system to a biquadratic in v = x - z, and
recovers every cycle exactly.  At most two cycles can match, which is
the algebraic heart of the scan certificate.
"""

from c4repeats import (
    CycleSolver,
    PrimeField,
    build_vertex_set,
    cycle_colors,
    quartic_coefficients,
)

p = 23
vertices = build_vertex_set(PrimeField(p))
solver = CycleSolver(vertices)

# forward direction: read the colors off a concrete cycle
cycle = (1, 2, 3, 4)
quadruple = cycle_colors(*cycle, p)
print("cycle %r carries colors %r mod %d" % (cycle, quadruple, p))

# the biquadratic whose roots are the candidate v values
coeffs = quartic_coefficients(quadruple, p)
print("biquadratic: %d v^4 + %d v^2 + %d = 0" % (coeffs.c4, coeffs.c2, coeffs.c0))
roots = solver.biquadratic_roots(coeffs)
print("roots v:", roots, "(closed under v -> p - v)")

# backward direction: the solver returns exactly the original cycle
for solution in solver.solve(quadruple):
    print("recovered:", solution.as_tuple(), "with u = %d, v = %d"
          % (solution.u, solution.v))

# quadruples with a - b + c - d = 0 mod p force y = w and have no cycles
degenerate = (1, 2, 4, 3)
print()
print("degenerate quadruple %r ->" % (degenerate,), solver.solve(degenerate))

# a quick census of how many valid quadruples have 0, 1, or 2 cycles
counts = {0: 0, 1: 0, 2: 0}
for a in range(1, p):
    for b in range(1, p):
        if a == b:
            continue
        for c in range(1, p):
            if b == c:
                continue
            for d in range(1, p):
                if c == d or d == a:
                    continue
                counts[len(solver.solve((a, b, c, d)))] += 1
print()
print("solutions per ordered quadruple at p = %d:" % p)
for k in sorted(counts):
    print("  %d cycles: %d quadruples" % (k, counts[k]))
