"""Exhaustive four-cycle census of a colored complete graph.

The complete graph on {1..a_max} holds 3 * C(a_max, 4) four-cycles
(three chord pairings per vertex quadruple).  The scanner enumerates
all of them, groups them by color pattern up to the dihedral symmetry
of the cycle, and certifies that no pattern class contains k pairwise
vertex-disjoint copies.  For the quadratic-form coloring and k = 3 the
scan is the brute-force half of the claim that three disjoint
color-isomorphic four-cycles never occur.

cross_validate plays the census against the algebraic solver: every
ordered color quadruple realized by some enumerated cycle must get back
exactly the same cycles from solve_quadruple, and sampled unrealized
quadruples must come back empty.

The hot path is vectorized: cycles are materialized as numpy blocks,
patterns are packed into base-p integers, and grouping is one argsort.
Python only touches the (tiny) per-pattern groups.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dataclass_field
from itertools import combinations
from typing import Iterator

import numpy as np

from .coloring import EdgeColoring
from .solver import CycleSolver, RepeatBoundViolation, validate_quadruple

# Default ceiling on scanned moduli: p = 199 means a_max = 66 and about
# 2.2 million cycles.  Larger p works but takes memory and patience, so
# going past the default is an explicit choice via `budget`.
DEFAULT_SCAN_LIMIT = 199

# The three chord pairings of a sorted 4-set, each oriented canonically
# (minimal vertex first, second label < fourth).
_PAIRINGS = ((0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 1, 3))

# The 8 dihedral relabelings of an oriented cycle, as (vertex
# permutation, color permutation) index pairs.  Rotating the vertex
# tuple rotates the color tuple alongside; reversing traversal reverses
# and shifts it, since color i sits between vertices i and i + 1.
_DIHEDRAL = (
    ((0, 1, 2, 3), (0, 1, 2, 3)),
    ((1, 2, 3, 0), (1, 2, 3, 0)),
    ((2, 3, 0, 1), (2, 3, 0, 1)),
    ((3, 0, 1, 2), (3, 0, 1, 2)),
    ((0, 3, 2, 1), (3, 2, 1, 0)),
    ((3, 2, 1, 0), (2, 1, 0, 3)),
    ((2, 1, 0, 3), (1, 0, 3, 2)),
    ((1, 0, 3, 2), (0, 3, 2, 1)),
)


@dataclass(frozen=True)
class C4Copy:
    """One four-cycle in canonical orientation, with its color sequence."""

    vertices: tuple[int, int, int, int]
    colors: tuple[int, int, int, int]


def enumerate_c4(coloring: EdgeColoring) -> Iterator[C4Copy]:
    """Yield every four-cycle exactly once, lexicographically.

    Each unordered cycle appears in its canonical orientation: smallest
    vertex first, then the smaller of its two neighbors.  Empty stream
    for a_max < 4.
    """
    table = coloring.table
    for quad in combinations(range(1, coloring.a_max + 1), 4):
        for pairing in _PAIRINGS:
            x, y, z, w = (quad[i] for i in pairing)
            yield C4Copy(
                (x, y, z, w),
                (
                    int(table[x, y]),
                    int(table[y, z]),
                    int(table[z, w]),
                    int(table[w, x]),
                ),
            )


def canonical_pattern(
    colors: tuple[int, int, int, int]
) -> tuple[int, int, int, int]:
    """Lexicographic minimum of the 8 dihedral images of a color sequence.

    Two cycles are color-isomorphic exactly when their canonical
    patterns agree: a color-preserving isomorphism of four-cycles is a
    dihedral alignment of their color sequences.
    """
    return min(
        tuple(colors[i] for i in color_perm) for _, color_perm in _DIHEDRAL
    )


def _cycle_block(
    coloring: EdgeColoring, x_lo: int, x_hi: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """All cycles whose smallest vertex lies in [x_lo, x_hi).

    Returns (vertices, colors, canonical codes): rows align across the
    three, vertices and colors are (rows, 4) int32, codes pack each
    canonical pattern into a base-p int64.
    """
    a_max = coloring.a_max
    p = coloring.p
    combos = [
        (x,) + rest
        for x in range(x_lo, x_hi)
        for rest in combinations(range(x + 1, a_max + 1), 3)
    ]
    if not combos:
        empty4 = np.empty((0, 4), dtype=np.int32)
        return empty4, empty4.copy(), np.empty(0, dtype=np.int64)
    quads = np.array(combos, dtype=np.int32)
    m = quads.shape[0]
    verts = np.empty((3 * m, 4), dtype=np.int32)
    for slot, pairing in enumerate(_PAIRINGS):
        verts[slot::3] = quads[:, pairing]
    table = coloring.table
    colors = np.empty((3 * m, 4), dtype=np.int32)
    for i in range(4):
        colors[:, i] = table[verts[:, i], verts[:, (i + 1) % 4]]
    # properness makes consecutive colors differ; cheap to re-assert
    for i in range(4):
        if not np.all(colors[:, i] != colors[:, (i + 1) % 4]):
            raise AssertionError("adjacent equal colors in enumerated cycle")
    wide = colors.astype(np.int64)
    codes = None
    for _, color_perm in _DIHEDRAL:
        enc = wide[:, color_perm[0]]
        for i in color_perm[1:]:
            enc = enc * p + wide[:, i]
        codes = enc if codes is None else np.minimum(codes, enc)
    return verts, colors, codes


def _decode_pattern(code: int, p: int) -> tuple[int, int, int, int]:
    d = code % p
    code //= p
    c = code % p
    code //= p
    b = code % p
    return (code // p, b, c, d)


def _max_disjoint(masks: list[int]) -> int:
    """Exact maximum pairwise-disjoint subfamily, by backtracking.

    masks are vertex bitmasks; groups are small (the algebraic bound
    caps them around 16), so exact search is cheap and cannot
    under-count the way a greedy pass could.
    """
    best = 0
    n = len(masks)

    def walk(idx: int, used: int, count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        if count + (n - idx) <= best:
            return
        for j in range(idx, n):
            m = masks[j]
            if not m & used:
                walk(j + 1, used | m, count + 1)

    walk(0, 0, 0)
    return best


@dataclass(frozen=True)
class DisjointFamilyReport:
    """Outcome of one scan: pattern statistics and the k-family verdict."""

    p: int
    a_max: int
    k: int
    copies: int
    patterns: int
    max_disjoint_family: int
    family_histogram: tuple[tuple[int, int], ...]  # (family size, #patterns)
    worst_patterns: tuple[dict, ...]
    _codes: np.ndarray = dataclass_field(repr=False, compare=False)
    _counts: np.ndarray = dataclass_field(repr=False, compare=False)
    _families: np.ndarray = dataclass_field(repr=False, compare=False)

    @property
    def passed(self) -> bool:
        return self.max_disjoint_family <= self.k - 1

    def iter_patterns(self) -> Iterator[tuple[tuple[int, int, int, int], int, int]]:
        """(pattern, copy count, family size), ascending by pattern."""
        for code, count, family in zip(
            self._codes.tolist(), self._counts.tolist(), self._families.tolist()
        ):
            yield _decode_pattern(code, self.p), count, family

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "a_max": self.a_max,
            "k": self.k,
            "copies": self.copies,
            "patterns": self.patterns,
            "max_disjoint_family": self.max_disjoint_family,
            "pass": self.passed,
            "family_histogram": {
                str(size): count for size, count in self.family_histogram
            },
            "worst_patterns": [dict(w) for w in self.worst_patterns],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["a", "b", "c", "d", "copies", "family_size"])
        for pattern, count, family in self.iter_patterns():
            writer.writerow(list(pattern) + [count, family])
        return buf.getvalue()


def group_and_check(
    coloring: EdgeColoring,
    k: int,
    workers: int = 1,
    budget: int = DEFAULT_SCAN_LIMIT,
) -> DisjointFamilyReport:
    """Scan the whole coloring and test for k disjoint same-pattern cycles.

    Groups the 3 * C(a_max, 4) cycles by canonical color pattern and
    runs an exact maximum-disjoint-family search inside each group.
    Passes iff no group reaches k.  Violations are reported, never
    raised.  Refuses p > budget so a casual call cannot start a scan
    with millions of groups; pass a bigger budget deliberately.
    """
    if k < 2:
        raise ValueError("threshold k must be at least 2")
    if coloring.p > budget:
        raise ValueError(
            "p = %d exceeds the scan budget %d; raise budget= explicitly"
            % (coloring.p, budget)
        )
    a_max = coloring.a_max
    if workers < 1:
        raise ValueError("workers must be positive")
    blocks = []
    if workers == 1 or a_max < 8:
        blocks.append(_cycle_block(coloring, 1, a_max + 1))
    else:
        # partition on the smallest vertex; weights fall off as x grows,
        # so split at roughly equal copy counts
        weights = [
            (a_max - x) * (a_max - x - 1) * (a_max - x - 2) // 6
            for x in range(1, a_max + 1)
        ]
        total = sum(weights)
        bounds = [1]
        acc = 0
        for x, wt in enumerate(weights, start=1):
            acc += wt
            if acc >= total * len(bounds) / workers and len(bounds) < workers:
                bounds.append(x + 1)
        bounds.append(a_max + 1)
        ranges = [
            (lo, hi) for lo, hi in zip(bounds, bounds[1:]) if lo < hi
        ]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            blocks = list(
                pool.map(_scan_range, [(coloring, lo, hi) for lo, hi in ranges])
            )
    verts = np.concatenate([b[0] for b in blocks])
    codes = np.concatenate([b[2] for b in blocks])
    copies = int(verts.shape[0])

    order = np.argsort(codes, kind="stable")
    sorted_codes = codes[order]
    if copies:
        starts = np.concatenate(
            ([0], np.flatnonzero(sorted_codes[1:] != sorted_codes[:-1]) + 1)
        )
        ends = np.concatenate((starts[1:], [copies]))
    else:
        starts = np.empty(0, dtype=np.int64)
        ends = starts
    n_groups = starts.size
    group_codes = sorted_codes[starts] if copies else sorted_codes
    group_counts = (ends - starts).astype(np.int64)
    families = np.ones(n_groups, dtype=np.int64)
    multi = np.flatnonzero(group_counts > 1)
    for gi in multi.tolist():
        rows = order[starts[gi]:ends[gi]]
        masks = [
            (1 << a) | (1 << b) | (1 << c) | (1 << d)
            for a, b, c, d in verts[rows].tolist()
        ]
        families[gi] = _max_disjoint(masks)
    max_family = int(families.max()) if n_groups else 0

    hist_sizes, hist_counts = (
        np.unique(families, return_counts=True) if n_groups else ([], [])
    )
    histogram = tuple(
        (int(s), int(c)) for s, c in zip(hist_sizes, hist_counts)
    )
    worst = []
    if n_groups:
        for gi in np.flatnonzero(families == max_family)[:10].tolist():
            worst.append(
                {
                    "pattern": list(_decode_pattern(int(group_codes[gi]), coloring.p)),
                    "copies": int(group_counts[gi]),
                    "family_size": int(families[gi]),
                }
            )
    return DisjointFamilyReport(
        p=coloring.p,
        a_max=a_max,
        k=k,
        copies=copies,
        patterns=int(n_groups),
        max_disjoint_family=max_family,
        family_histogram=histogram,
        worst_patterns=tuple(worst),
        _codes=group_codes,
        _counts=group_counts,
        _families=families,
    )


def _scan_range(args) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    coloring, lo, hi = args
    return _cycle_block(coloring, lo, hi)


@dataclass(frozen=True)
class CrossValidationReport:
    """Solver-versus-census agreement over one coloring."""

    p: int
    a_max: int
    copies: int
    realized_quadruples: int
    sampled_quadruples: int
    max_solutions: int
    mismatches: tuple[dict, ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "a_max": self.a_max,
            "copies": self.copies,
            "realized_quadruples": self.realized_quadruples,
            "sampled_quadruples": self.sampled_quadruples,
            "max_solutions": self.max_solutions,
            "mismatches": list(self.mismatches),
            "pass": self.passed,
        }


def cross_validate(
    coloring: EdgeColoring, samples: int = 500, seed: int = 0
) -> CrossValidationReport:
    """Check the algebraic solver against exhaustive enumeration.

    Every ordered color quadruple realized by an enumerated cycle must
    get back from the solver exactly the cycles (as ordered tuples)
    that realize it; on top of that, `samples` random valid quadruples
    are solved and compared against the census, so unrealized ones must
    come back empty.  Mismatches, including solver exceptions, land in
    the report rather than propagating.
    """
    import random

    p = coloring.p
    a_max = coloring.a_max
    realized: dict[tuple, set] = {}
    copies = 0
    if a_max >= 4:
        verts, colors, _ = _cycle_block(coloring, 1, a_max + 1)
        copies = int(verts.shape[0])
        vlists = verts.tolist()
        clists = colors.tolist()
        for vrow, crow in zip(vlists, clists):
            for vperm, cperm in _DIHEDRAL:
                key = (crow[cperm[0]], crow[cperm[1]], crow[cperm[2]], crow[cperm[3]])
                entry = (vrow[vperm[0]], vrow[vperm[1]], vrow[vperm[2]], vrow[vperm[3]])
                bucket = realized.get(key)
                if bucket is None:
                    realized[key] = {entry}
                else:
                    bucket.add(entry)

    solver = CycleSolver(coloring.vertices)
    mismatches: list[dict] = []
    max_solutions = 0

    def check(quadruple: tuple, expected: set) -> None:
        nonlocal max_solutions
        try:
            got = {sol.as_tuple() for sol in solver.solve(quadruple)}
        except RepeatBoundViolation as exc:
            mismatches.append(
                {"quadruple": list(quadruple), "error": str(exc)}
            )
            return
        if len(got) > max_solutions:
            max_solutions = len(got)
        if got != expected:
            mismatches.append(
                {
                    "quadruple": list(quadruple),
                    "solver": sorted(got),
                    "census": sorted(expected),
                }
            )

    for quadruple in sorted(realized):
        check(quadruple, realized[quadruple])

    rng = random.Random(seed)
    sampled = 0
    while sampled < samples:
        q = tuple(rng.randrange(1, p) for _ in range(4))
        try:
            validate_quadruple(q, p)
        except ValueError:
            continue
        sampled += 1
        check(q, realized.get(q, set()))

    return CrossValidationReport(
        p=p,
        a_max=a_max,
        copies=copies,
        realized_quadruples=len(realized),
        sampled_quadruples=sampled,
        max_solutions=max_solutions,
        mismatches=tuple(mismatches),
    )
