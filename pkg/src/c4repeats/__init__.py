"""Proper edge colorings of K_n with few color-repeating four-cycles.

The construction colors the edge {x, y} of the complete graph on
{1..(p-1)/3} with x^2 + xy + y^2 mod p, for a prime p = 5 (mod 6).
The library certifies its two headline properties: the coloring is
proper, and no three pairwise vertex-disjoint four-cycles share a color
pattern.  A companion module does repeat counting for edge-colored
K_{n,n} and the exponent bookkeeping for the resulting lower bounds.
"""

from .coloring import (
    EdgeColoring,
    VertexSet,
    build_coloring,
    build_vertex_set,
    census,
    color_edge,
    coloring_from_json,
    coloring_to_csv,
    coloring_to_json,
    verify_proper,
)
from .field import (
    PrimeField,
    find_prime,
    is_prime,
    is_quadratic_residue,
    mod_inverse,
    primes_5_mod_6,
    sqrt_mod,
)
from .polynomial import (
    Poly,
    determinant_mod,
    poly_gcd,
    resultant,
    resultant_euclid,
    sylvester_matrix,
    verify_elimination_identities,
)
from .ramsey import (
    BipartiteColoring,
    PatternGraph,
    bound_exponent,
    build_auxiliary,
    certify_kst,
    count_repeats,
    find_pattern,
    pair_count,
)
from .scanner import (
    C4Copy,
    canonical_pattern,
    cross_validate,
    enumerate_c4,
    group_and_check,
)
from .solver import (
    BiquadraticCoefficients,
    CycleSolution,
    CycleSolver,
    cycle_colors,
    quartic_coefficients,
    solve_quadruple,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteColoring",
    "BiquadraticCoefficients",
    "C4Copy",
    "CycleSolution",
    "CycleSolver",
    "EdgeColoring",
    "PatternGraph",
    "Poly",
    "PrimeField",
    "VertexSet",
    "bound_exponent",
    "build_auxiliary",
    "build_coloring",
    "build_vertex_set",
    "canonical_pattern",
    "census",
    "certify_kst",
    "color_edge",
    "coloring_from_json",
    "coloring_to_csv",
    "coloring_to_json",
    "count_repeats",
    "cross_validate",
    "cycle_colors",
    "determinant_mod",
    "enumerate_c4",
    "find_pattern",
    "find_prime",
    "group_and_check",
    "is_prime",
    "is_quadratic_residue",
    "mod_inverse",
    "pair_count",
    "poly_gcd",
    "primes_5_mod_6",
    "quartic_coefficients",
    "resultant",
    "resultant_euclid",
    "solve_quadruple",
    "sqrt_mod",
    "sylvester_matrix",
    "verify_elimination_identities",
    "verify_proper",
]
