"""Exhaustive cycle census, pattern grouping, and solver cross-checks."""

import itertools
import math
import random

import pytest

from c4repeats.coloring import build_coloring
from c4repeats.field import PrimeField
from c4repeats.scanner import (
    DEFAULT_SCAN_LIMIT,
    C4Copy,
    canonical_pattern,
    cross_validate,
    enumerate_c4,
    group_and_check,
    _max_disjoint,
)
from c4repeats.solver import cycle_colors


def coloring_for(p):
    return build_coloring(PrimeField(p))


def dihedral_images(colors):
    """All traversal-induced color sequences, derived from scratch.

    Starting a cycle traversal elsewhere rotates the color sequence;
    flipping direction reverses it (and every rotation of the reversal
    arises from some start).
    """
    images = set()
    for shift in range(4):
        rotated = colors[shift:] + colors[:shift]
        images.add(rotated)
        images.add(tuple(reversed(rotated)))
    return images


def test_enumeration_count_is_three_per_quadruple():
    assert sum(1 for _ in enumerate_c4(coloring_for(11))) == 0
    assert sum(1 for _ in enumerate_c4(coloring_for(17))) == 15
    assert sum(1 for _ in enumerate_c4(coloring_for(23))) == 3 * math.comb(7, 4)


def test_enumeration_yields_each_pairing_once():
    seen: dict[frozenset, set] = {}
    for copy in enumerate_c4(coloring_for(17)):
        key = frozenset(copy.vertices)
        assert len(key) == 4
        seen.setdefault(key, set()).add(copy.vertices)
    assert len(seen) == math.comb(5, 4)
    for key, orderings in seen.items():
        assert len(orderings) == 3
        # the three orderings pair the quadruple across all three chords
        partners = {frozenset((v[0], v[2])) for v in orderings}
        assert len(partners) == 3


def test_enumeration_orientation_and_colors():
    coloring = coloring_for(23)
    for copy in enumerate_c4(coloring):
        x, y, z, w = copy.vertices
        assert x == min(copy.vertices)
        assert y < w
        assert copy.colors == cycle_colors(x, y, z, w, 23)


def test_canonical_pattern_examples():
    assert canonical_pattern((7, 19, 14, 21)) == (7, 19, 14, 21)
    assert canonical_pattern((2, 1, 2, 1)) == (1, 2, 1, 2)
    assert canonical_pattern((21, 7, 19, 14)) == (7, 19, 14, 21)
    assert canonical_pattern((4, 3, 2, 1)) == (1, 2, 3, 4)


def test_canonical_pattern_matches_scratch_oracle():
    rng = random.Random(0)
    for _ in range(500):
        colors = tuple(rng.randrange(1, 30) for _ in range(4))
        expected = min(dihedral_images(colors))
        assert canonical_pattern(colors) == expected
        # invariance: every image canonicalizes to the same pattern
        for image in dihedral_images(colors):
            assert canonical_pattern(image) == expected
    # idempotence
    assert canonical_pattern(canonical_pattern((9, 1, 5, 1))) == canonical_pattern(
        (9, 1, 5, 1)
    )


def test_canonical_pattern_constant_on_true_cycle_images():
    # traverse one concrete cycle all 8 ways and recompute colors fresh
    p = 23
    x, y, z, w = 1, 5, 2, 7
    base = canonical_pattern(cycle_colors(x, y, z, w, p))
    ring = (x, y, z, w)
    for start in range(4):
        for step in (1, -1):
            path = tuple(ring[(start + step * i) % 4] for i in range(4))
            assert canonical_pattern(cycle_colors(*path, p)) == base


def test_max_disjoint_exact():
    assert _max_disjoint([]) == 0
    assert _max_disjoint([0b0011, 0b1100, 0b0110]) == 2
    assert _max_disjoint([0b0011, 0b0101, 0b0110]) == 1
    assert _max_disjoint([0b0011, 0b1100, 0b110000, 0b11000000]) == 4
    # a case where greedy-by-order stalls at 1 but the true answer is 2
    assert _max_disjoint([0b1111, 0b0011, 0b1100]) == 2


def test_group_and_check_small_primes():
    report = group_and_check(coloring_for(17), k=3)
    assert report.p == 17 and report.a_max == 5
    assert report.copies == 15
    assert report.passed
    assert report.max_disjoint_family <= 2
    assert sum(count for _, count in report.family_histogram) == report.patterns
    total = 0
    for pattern, count, family in report.iter_patterns():
        assert pattern == canonical_pattern(pattern)
        assert 1 <= family <= count
        total += count
    assert total == report.copies


def test_group_and_check_empty_graph():
    report = group_and_check(coloring_for(11), k=3)
    assert report.copies == 0
    assert report.patterns == 0
    assert report.max_disjoint_family == 0
    assert report.passed
    assert report.to_csv().strip() == "a,b,c,d,copies,family_size"


def test_group_matches_independent_grouping():
    # recount pattern classes by dict, no numpy, no packing
    coloring = coloring_for(47)
    by_pattern: dict[tuple, int] = {}
    for copy in enumerate_c4(coloring):
        key = canonical_pattern(copy.colors)
        by_pattern[key] = by_pattern.get(key, 0) + 1
    report = group_and_check(coloring, k=3)
    got = {pattern: count for pattern, count, _ in report.iter_patterns()}
    assert got == by_pattern


def test_group_and_check_rejects_bad_arguments():
    coloring = coloring_for(17)
    with pytest.raises(ValueError):
        group_and_check(coloring, k=1)
    with pytest.raises(ValueError):
        group_and_check(coloring, k=3, workers=0)
    with pytest.raises(ValueError):
        group_and_check(coloring_for(101), k=3, budget=50)
    # raising the budget deliberately clears the refusal
    assert group_and_check(coloring_for(101), k=3, budget=101).passed


def test_default_budget_is_checked():
    big = coloring_for(227)
    assert big.p > DEFAULT_SCAN_LIMIT
    with pytest.raises(ValueError):
        group_and_check(big, k=3)


def test_parallel_scan_matches_serial():
    coloring = coloring_for(53)
    serial = group_and_check(coloring, k=3, workers=1)
    parallel = group_and_check(coloring, k=3, workers=2)
    assert serial.as_dict() == parallel.as_dict()
    assert serial.to_csv() == parallel.to_csv()


def test_scan_is_deterministic():
    a = group_and_check(coloring_for(53), k=3)
    b = group_and_check(coloring_for(53), k=3)
    assert a.as_dict() == b.as_dict()
    assert a.to_csv() == b.to_csv()


def test_report_serialization_shape():
    report = group_and_check(coloring_for(23), k=3)
    data = report.as_dict()
    assert data["pass"] is True
    assert data["copies"] == report.copies
    assert set(data["family_histogram"]) == {
        str(size) for size, _ in report.family_histogram
    }
    for worst in data["worst_patterns"]:
        assert worst["family_size"] == report.max_disjoint_family
    lines = report.to_csv().strip().splitlines()
    assert lines[0] == "a,b,c,d,copies,family_size"
    assert len(lines) == 1 + report.patterns


def test_family_verdicts_match_literal_search():
    # recompute max disjoint families per pattern via itertools, p = 23
    coloring = coloring_for(23)
    groups: dict[tuple, list] = {}
    for copy in enumerate_c4(coloring):
        groups.setdefault(canonical_pattern(copy.colors), []).append(copy.vertices)
    literal = {}
    for pattern, members in groups.items():
        best = 1
        for size in range(2, len(members) + 1):
            hit = any(
                all(
                    set(a).isdisjoint(b)
                    for a, b in itertools.combinations(chosen, 2)
                )
                for chosen in itertools.combinations(members, size)
            )
            if hit:
                best = size
            else:
                break
        literal[pattern] = best
    report = group_and_check(coloring, k=3)
    got = {pattern: family for pattern, _, family in report.iter_patterns()}
    assert got == literal


def test_cross_validate_agrees_everywhere():
    report = cross_validate(coloring_for(23), samples=300, seed=1)
    assert report.passed
    assert report.copies == 105
    assert report.max_solutions <= 2
    assert report.sampled_quadruples == 300
    # realized ordered quadruples, recounted from a literal enumeration
    realized = set()
    for x, y, z, w in itertools.permutations(range(1, 8), 4):
        realized.add(cycle_colors(x, y, z, w, 23))
    assert report.realized_quadruples == len(realized)


def test_cross_validate_medium_prime():
    report = cross_validate(coloring_for(53), samples=100, seed=2)
    assert report.passed
    assert report.max_solutions <= 2
    assert report.mismatches == ()


def test_c4copy_is_plain_data():
    copy = C4Copy((1, 2, 3, 4), (7, 19, 14, 21))
    assert copy.vertices == (1, 2, 3, 4)
    assert copy.colors == (7, 19, 14, 21)
