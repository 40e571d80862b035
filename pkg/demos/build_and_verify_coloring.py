"""
Building the quadratic-form coloring and checking it is proper
==============================================================

The edge {x, y} of a complete graph on {1..(p-1)/3} gets the color
x^2 + xy + y^2 mod p.  For primes p = 5 (mod 6) this is a proper
coloring that uses fewer than p colors.
"""

from c4repeats import PrimeField, build_coloring, census, find_prime, verify_proper

# any lower bound works; find_prime picks the next usable modulus
field = find_prime(100)
print("smallest usable prime at or above 100:", field.p)

coloring = build_coloring(field)
print("vertices: 1 ..", coloring.a_max)
print("edges:", coloring.n_edges)

# a few sample edge colors straight from the table
for x, y in [(1, 2), (5, 9), (12, 33)]:
    print("color of {%d, %d} = %d" % (x, y, coloring.color_of(x, y)))

# verify_proper re-derives the two facts the construction leans on:
# every color is nonzero and no vertex sees a color twice
report = verify_proper(coloring)
print("proper:", report.proper)
print("colors nonzero:", report.colors_nonzero)
print("3 * a_max < p:", report.triple_sums_below_p)

# the whole point: the number of distinct colors stays below p
summary = census(coloring)
print("distinct colors:", summary.distinct_colors, "(p - 1 = %d)" % (field.p - 1))
print("colors per vertex:", summary.colors_per_vertex_ratio)
print("largest color class:", summary.max_class_size)

# the same numbers for a sweep of moduli show the linear growth
print()
print("p      a_max  colors  p-1")
for lower in (10, 50, 100, 200, 400):
    f = find_prime(lower)
    c = census(build_coloring(f))
    print("%-6d %-6d %-7d %d" % (f.p, c.a_max, c.distinct_colors, f.p - 1))
