"""
Pair graphs and repeat certificates on colored grids
====================================================

A coloring of K_{n,n} is an n x n matrix of color ids.  Same-color
edge pairs become edges of an auxiliary pair graph; a bipartite
pattern embedded there pins color coincidences, which caps how many
distinct colors a K_{s,t} containing the footprint can show.
"""

import numpy as np

from c4repeats import (
    BipartiteColoring,
    PatternGraph,
    build_auxiliary,
    certify_kst,
    count_repeats,
    find_pattern,
    pair_count,
)

# a 4 x 4 coloring with one heavily repeated color
colors = np.arange(16).reshape(4, 4) % 5
coloring = BipartiteColoring(4, colors)
print("color matrix:")
print(coloring.colors)

# repeats of the whole grid: edges minus distinct colors
repeats = count_repeats(coloring.colors.ravel().tolist())
print()
print("repeats of the full grid:", repeats.r)
print("per color:", repeats.per_color)

# the pair counts and the convexity bound they always beat
counts = pair_count(coloring)
print()
print("same-color pairs:", counts.same_color_pairs)
print("pair-graph edges:", counts.aux_edge_count,
      "(gap: %d)" % counts.counting_gap)
print("convexity bound:", counts.bound_exact,
      " asymptotic form:", counts.bound_asymptotic)

# search the pair graph for a four-cycle pattern
graph = build_auxiliary(coloring)
pattern = PatternGraph.even_cycle(4)
result = find_pattern(graph, pattern)
print()
print("pair-graph vertices per side:", graph.side_size)
print("searching for a 2+2 cycle pattern:", result.status,
      "(%d nodes explored)" % result.nodes)

# a found embedding extends to a K_{s,t} with provably few colors
if result.status == "found":
    certificate = certify_kst(result.embedding, coloring, 4, 4)
    print("rows", certificate.row_vertices, "cols", certificate.col_vertices)
    print("distinct colors: %d <= bound %d -> %s"
          % (certificate.distinct_colors, certificate.bound,
             certificate.passed))
