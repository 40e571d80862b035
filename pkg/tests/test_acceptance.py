"""End-to-end acceptance gate.

Eight criteria, one test each, every test printing a single
"PASS criterion N: ..." or "FAIL criterion N: ..." line (run pytest
with -s to see the lines for passing tests).  Together they certify:
the coloring is proper with at most p - 1 colors, no scanned prime
admits three disjoint same-pattern four-cycles, the algebraic solver
agrees with exhaustive enumeration, the elimination identities and
resultant machinery hold under random fire, the bipartite pair-graph
machinery survives an exhaustive small-case sweep, the exponent
calculator reproduces the known parameter packs exactly, and scan
reports are byte-identical across runs.
"""

import itertools
import math
import random
from fractions import Fraction

from c4repeats.cli import main as cli_main
from c4repeats.coloring import build_coloring, census, verify_proper
from c4repeats.field import PrimeField, primes_5_mod_6
from c4repeats.polynomial import (
    Poly,
    poly_gcd,
    resultant,
    resultant_euclid,
    verify_elimination_identities,
)
from c4repeats.ramsey import (
    BipartiteColoring,
    PatternGraph,
    bound_exponent,
    build_auxiliary,
    certify_kst,
    find_pattern,
    pair_count,
)
from c4repeats.scanner import cross_validate, group_and_check
from c4repeats.solver import CycleSolver, cycle_colors


def _report(number: int, ok: bool, detail: str) -> None:
    print("%s criterion %d: %s" % ("PASS" if ok else "FAIL", number, detail))
    assert ok, "criterion %d: %s" % (number, detail)


def test_criterion_1_properness_and_color_count():
    failures = []
    checked = 0
    for p in primes_5_mod_6(11, 500):
        coloring = build_coloring(PrimeField(p))
        properness = verify_proper(coloring)
        summary = census(coloring)
        checked += 1
        if not properness.passed:
            failures.append((p, "properness", properness.conflicts[:3]))
        if not (summary.distinct_colors <= p - 1 <= 3 * coloring.a_max + 3):
            failures.append((p, "color count", summary.distinct_colors))
    _report(
        1,
        checked > 0 and not failures,
        "proper coloring with nonzero colors and at most p - 1 distinct "
        "colors for all %d primes p = 5 (mod 6) in [11, 499]%s"
        % (checked, "" if not failures else "; failures: %r" % failures[:3]),
    )


def test_criterion_2_no_three_disjoint_copies():
    failures = []
    checked = 0
    worst = 0
    for p in primes_5_mod_6(23, 200):
        report = group_and_check(build_coloring(PrimeField(p)), k=3)
        checked += 1
        worst = max(worst, report.max_disjoint_family)
        if not report.passed:
            failures.append((p, report.worst_patterns[:2]))
    _report(
        2,
        checked > 0 and not failures,
        "exhaustive scan finds no 3 pairwise disjoint color-isomorphic "
        "four-cycles for all %d primes in [23, 199]; largest family seen: %d%s"
        % (checked, worst, "" if not failures else "; failures: %r" % failures),
    )


def test_criterion_3_solver_matches_brute_force():
    failures = []
    checked = 0
    max_solutions = 0
    for p in primes_5_mod_6(23, 102):
        report = cross_validate(build_coloring(PrimeField(p)), samples=500, seed=p)
        checked += 1
        max_solutions = max(max_solutions, report.max_solutions)
        if not report.passed:
            failures.append((p, report.mismatches[:2]))

    # independent literal sub-check at p = 23: enumerate A^4 directly
    p = 23
    solver = CycleSolver(build_coloring(PrimeField(p)).vertices)
    literal: dict[tuple, set] = {}
    for cycle in itertools.permutations(range(1, 8), 4):
        literal.setdefault(cycle_colors(*cycle, p), set()).add(cycle)
    for quadruple, cycles in literal.items():
        solutions = solver.solve(quadruple)
        if {s.as_tuple() for s in solutions} != cycles:
            failures.append((p, "literal", quadruple))
        for sol in solutions:
            if cycle_colors(*sol.as_tuple(), p) != quadruple:
                failures.append((p, "equations", quadruple))
        max_solutions = max(max_solutions, len(solutions))
    _report(
        3,
        checked > 0 and not failures and max_solutions <= 2,
        "solver output equals exhaustive enumeration for %d primes in "
        "[23, 101], plus a literal A^4 recount at p = 23; at most %d "
        "solutions per quadruple%s"
        % (checked, max_solutions,
           "" if not failures else "; failures: %r" % failures[:3]),
    )


def test_criterion_4_elimination_identities():
    failures = []
    stats = []
    for p in (23, 101, 1019):
        report = verify_elimination_identities(p, trials=10_000, seed=p)
        stats.append((p, report.generic, report.degenerate))
        if not report.passed:
            failures.append(
                (p, report.identity_failures[:2], report.resultant_failures[:2])
            )
    _report(
        4,
        not failures,
        "elimination identities hold on 10^4 random tuples at each of "
        "p = 23, 101, 1019 (generic/degenerate splits: %s)%s"
        % (", ".join("%d: %d/%d" % t for t in stats),
           "" if not failures else "; failures: %r" % failures),
    )


def test_criterion_5_resultant_iff_common_factor():
    rng = random.Random(5)
    primes = (7, 11, 23, 53, 101)
    failures = []
    planted = 0
    for trial in range(1000):
        p = primes[trial % len(primes)]

        def random_poly(max_deg):
            degree = rng.randrange(1, max_deg + 1)
            coeffs = [rng.randrange(p) for _ in range(degree)] + [
                rng.randrange(1, p)
            ]
            return Poly(coeffs, p)

        if trial % 3 == 0:
            root = rng.randrange(p)
            factor = Poly([-root, 1], p)
            f = factor * random_poly(4)
            g = factor * random_poly(4)
            planted += 1
        else:
            f = random_poly(5)
            g = random_poly(5)
        res = resultant(f, g)
        shares = poly_gcd(f, g).degree() >= 1
        if (res == 0) != shares:
            failures.append((p, f.coeffs, g.coeffs))
        if res != resultant_euclid(f, g):
            failures.append((p, "euclid-route", f.coeffs, g.coeffs))
    _report(
        5,
        not failures and planted >= 300,
        "resultant vanishes exactly when a common factor exists on 1000 "
        "random pairs (degree <= 5, %d with planted common roots), both "
        "evaluation routes agreeing%s"
        % (planted, "" if not failures else "; failures: %r" % failures[:3]),
    )


def test_criterion_6_pair_graph_machinery_exhaustive():
    patterns = [
        PatternGraph.single_edge(),
        PatternGraph(2, 1, ((0, 0), (1, 0))),
        PatternGraph(2, 2, ((0, 0), (1, 1))),
        PatternGraph.even_cycle(4),
    ]

    def brute_embeds(graph, pattern):
        for u_map in itertools.permutations(graph.u_vertices(), pattern.h1):
            for w_map in itertools.permutations(graph.w_vertices(), pattern.h2):
                if all(
                    graph.has_edge(u_map[i], w_map[j])
                    for i, j in pattern.edges
                ):
                    return True
        return False

    failures = []
    colorings = 0
    certificates = 0
    for n in (2, 3):
        for assignment in itertools.product(range(3), repeat=n * n):
            matrix = [list(assignment[i * n:(i + 1) * n]) for i in range(n)]
            coloring = BipartiteColoring(n, matrix)
            colorings += 1
            counts = pair_count(coloring)  # asserts convexity internally
            if counts.aux_edge_count > counts.same_color_pairs:
                failures.append((n, assignment, "pair undercount"))
            graph = build_auxiliary(coloring)
            for pattern in patterns:
                result = find_pattern(graph, pattern)
                if result.status == "indeterminate":
                    failures.append((n, assignment, "budget"))
                    continue
                if (result.status == "found") != brute_embeds(graph, pattern):
                    failures.append((n, assignment, pattern.edges))
                if result.status != "found":
                    continue
                for s in range(2 * pattern.h1, n + 1):
                    for t in range(2 * pattern.h2, n + 1):
                        cert = certify_kst(result.embedding, coloring, s, t)
                        certificates += 1
                        if not cert.passed:
                            failures.append((n, assignment, cert.as_dict()))
    _report(
        6,
        not failures and colorings == 3**4 + 3**9,
        "all %d colorings of 2x2 and 3x3 grids with up to 3 colors: pair "
        "counts bound the pair-graph edges, pattern search matches literal "
        "injection enumeration, and all %d certificates recheck%s"
        % (colorings, certificates,
           "" if not failures else "; failures: %r" % failures[:3]),
    )


def test_criterion_7_exponent_packs_exact():
    failures = []
    checks = 0

    # even cycles C_s: q = s^2 - s + 1, exponent 2 - 4/s
    for s in range(4, 21, 2):
        pattern = PatternGraph.even_cycle(s)
        got = bound_exponent(
            s, s, 1 + Fraction(2, s), pattern.h1, pattern.h2, pattern.edge_count
        )
        checks += 1
        if got.exponent != 2 - Fraction(4, s) or got.q != s * s - s + 1:
            failures.append(("cycle", s, got))

    # subdivided cliques: exponent 1 + 1/(s - 3)
    for s in range(6, 21, 2):
        r = s // 2
        pattern = PatternGraph.subdivided_clique(r)
        t = 2 * math.comb(r, 2)
        got = bound_exponent(
            s, t, Fraction(3, 2) - Fraction(1, 2 * s - 6),
            pattern.h1, pattern.h2, pattern.edge_count,
        )
        checks += 1
        if got.exponent != 1 + Fraction(1, s - 3):
            failures.append(("clique", s, got))
        if got.q != s * t - pattern.edge_count + 1:
            failures.append(("clique-q", s, got))

    # subdivided complete bipartite: exponent 1 + 4/s
    for s in (8, 12, 16, 20):
        m = s // 4
        pattern = PatternGraph.subdivided_complete_bipartite(m, m)
        t = s * s // 8
        got = bound_exponent(
            s, t, Fraction(3, 2) - Fraction(2, s),
            pattern.h1, pattern.h2, pattern.edge_count,
        )
        checks += 1
        if got.exponent != 1 + Fraction(4, s):
            failures.append(("bipartite", s, got))

    # complete bipartite K_{m,l}: exponent 2/m, q = st - ml + 1
    for m, l in [(2, 2), (2, 3), (2, 8), (3, 3), (3, 7), (4, 5), (5, 5),
                 (6, 9), (10, 10)]:
        s, t = 2 * m, 2 * l
        got = bound_exponent(s, t, 2 - Fraction(1, m), m, l, m * l)
        checks += 1
        if got.exponent != Fraction(2, m) or got.q != s * t - m * l + 1:
            failures.append(("complete", (m, l), got))

    _report(
        7,
        not failures,
        "exponent calculator reproduces all four parameter packs exactly "
        "(%d cases, s up to 20)%s"
        % (checks, "" if not failures else "; failures: %r" % failures[:3]),
    )


def test_criterion_8_scan_reports_are_byte_identical(tmp_path):
    first = tmp_path / "first.json"
    second = tmp_path / "second.json"
    code1 = cli_main(["scan", "--prime", "101", "--k", "3", "--out", str(first)])
    code2 = cli_main(["scan", "--prime", "101", "--k", "3", "--out", str(second)])
    identical = first.read_bytes() == second.read_bytes()
    _report(
        8,
        code1 == 0 and code2 == 0 and identical,
        "two `scan --prime 101 --k 3` runs exited %d/%d and produced "
        "byte-identical reports (%d bytes)"
        % (code1, code2, len(first.read_bytes())),
    )
