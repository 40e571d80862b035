"""
Exponents of the color-forcing lower bounds
===========================================

For a bipartite pattern H with Turan exponent alpha (so the extremal
edge count of H-free graphs on m vertices grows like m^alpha), any
coloring of K_{n,n} showing fewer than q = st - e(H) + 1 colors on
every K_{s,t} needs Omega(n^(4 - 2 alpha)) colors overall.  All
arithmetic is exact rationals, end to end.
"""

from fractions import Fraction

from c4repeats import PatternGraph, bound_exponent

# even cycles C_s inside K_{s,s}
print("even cycles:")
print("s    q        exponent")
for s in (4, 6, 8, 12, 20):
    pattern = PatternGraph.even_cycle(s)
    bound = bound_exponent(
        s, s, 1 + Fraction(2, s), pattern.h1, pattern.h2, pattern.edge_count
    )
    print("%-4d %-8d %s" % (s, bound.q, bound.exponent))

# subdivided cliques: every edge of a clique replaced by a path
print()
print("subdivided cliques:")
print("s    t        q        exponent")
for s in (6, 10, 14, 20):
    r = s // 2
    pattern = PatternGraph.subdivided_clique(r)
    t = 2 * pattern.h2  # two column slots per subdivision vertex
    bound = bound_exponent(
        s, t, Fraction(3, 2) - Fraction(1, 2 * s - 6),
        pattern.h1, pattern.h2, pattern.edge_count,
    )
    print("%-4d %-8d %-8d %s" % (s, t, bound.q, bound.exponent))

# complete bipartite patterns K_{m,l}
print()
print("complete bipartite patterns:")
print("m  l   s  t    q       exponent")
for m, l in [(2, 2), (2, 4), (3, 3), (4, 7)]:
    s, t = 2 * m, 2 * l
    bound = bound_exponent(s, t, 2 - Fraction(1, m), m, l, m * l)
    print("%d  %-3d %d  %-4d %-7d %s" % (m, l, s, t, bound.q, bound.exponent))

# the preconditions are named when violated
try:
    bound_exponent(3, 3, Fraction(3, 2), 1, 1, 1)
except ValueError as exc:
    print()
    print("rejected:", exc)
