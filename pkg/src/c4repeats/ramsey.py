"""Repeat counting machinery for edge-colored K_{n,n}.

A colored copy of a graph has r repeats when r = sum over its colors of
(multiplicity - 1); rainbow means r = 0.  To force copies of K_{s,t}
with many repeats (equivalently, few distinct colors), one builds an
auxiliary bipartite graph F on ordered vertex pairs: (a_i, a_j) with
i > j on the left, (b_k, b_l) with k > l on the right, joined exactly
when chi(a_i b_k) = chi(a_j b_l).  A bipartite pattern H embedded in F
pins e(H) color coincidences inside a small vertex set, which then
extends to a K_{s,t} showing at most st - e(H) distinct colors.

This module materializes F, counts same-color edge pairs against the
convexity lower bound, searches for pattern embeddings, emits and
rechecks the K_{s,t} certificates, and computes the exponent in the
resulting lower bounds from a caller-supplied Turan exponent.

Three bookkeeping subtleties are surfaced rather than glossed over.
First, e(F) undercounts same-color pairs in general: pairs sharing a
row or column vertex, and pairs whose column order opposes their row
order, never become F-edges (monochromatic K_{2,2}: one F-edge, six
same-color pairs).  Reports carry both numbers.  Second, the convexity
bound is asserted in its exact rational form n^2 (n^2 - |C|) / (2 |C|);
the looser n^4 / (4 |C|) form only follows once n^2 >= 2 |C| and is
reported as a flag.  Third, the e(H) color coincidences pinned by an
embedding need not be independent: when the pinned cell pairs contain a
cycle, each independent cycle costs one repeat, and the distinct-color
count can exceed st - e(H) by that many.  Certificates recheck the
count on the actual coloring and report such failures instead of
assuming the cap.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

import numpy as np


class InvalidPatternError(ValueError):
    """Pattern or part-size preconditions violated."""


class InvalidParametersError(ValueError):
    """Bound calculator inputs violate a named precondition."""


@dataclass(frozen=True)
class BipartiteColoring:
    """An edge coloring of K_{n,n} as an n x n matrix of color ids.

    Entry (i, k) is the color of the edge a_i b_k, zero-based.  Color
    ids are opaque integers; nothing requires the coloring proper.
    """

    n: int
    colors: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.colors, dtype=np.int64)
        if arr.shape != (self.n, self.n):
            raise ValueError(
                "color matrix must be %d x %d, got %r" % (self.n, self.n, arr.shape)
            )
        object.__setattr__(self, "colors", arr)

    def color(self, i: int, k: int) -> int:
        return int(self.colors[i, k])

    @property
    def color_set(self) -> tuple[int, ...]:
        return tuple(np.unique(self.colors).tolist())

    def to_json(self) -> str:
        return json.dumps(
            {"n": self.n, "colors": self.colors.tolist()},
            indent=2,
            sort_keys=True,
        ) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in self.colors.tolist():
            writer.writerow(row)
        return buf.getvalue()


def coloring_from_json(text: str) -> BipartiteColoring:
    data = json.loads(text)
    return BipartiteColoring(int(data["n"]), np.array(data["colors"]))


def coloring_from_csv(text: str) -> BipartiteColoring:
    rows = [
        [int(cell) for cell in line]
        for line in csv.reader(io.StringIO(text))
        if line
    ]
    return BipartiteColoring(len(rows), np.array(rows))


@dataclass(frozen=True)
class RepeatCount:
    r: int
    per_color: tuple[tuple[int, int], ...]  # (color, multiplicity), ascending


def count_repeats(edge_colors) -> RepeatCount:
    """Repeats of a colored subgraph: sum of (multiplicity - 1)."""
    values = list(edge_colors)
    if not values:
        raise ValueError("repeat count needs a non-empty edge multiset")
    counts: dict[int, int] = {}
    for c in values:
        counts[c] = counts.get(c, 0) + 1
    return RepeatCount(
        r=len(values) - len(counts),
        per_color=tuple(sorted(counts.items())),
    )


class AuxiliaryGraph:
    """The pair graph F of a bipartite coloring.

    Left vertices are pairs (i, j) with i > j, right vertices pairs
    (k, l) with k > l, and (i, j) ~ (k, l) exactly when
    chi(i, k) = chi(j, l).  Stored sparsely per color bucket; dense
    C(n,2) x C(n,2) storage would be Theta(n^4).
    """

    def __init__(self, coloring: BipartiteColoring, edges: list):
        self.coloring = coloring
        self.n = coloring.n
        self.edges = tuple(sorted(edges))
        self._adj_u: dict[tuple, list] = {}
        self._adj_w: dict[tuple, list] = {}
        for u, w in self.edges:
            self._adj_u.setdefault(u, []).append(w)
            self._adj_w.setdefault(w, []).append(u)

    @property
    def side_size(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def u_vertices(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(i)]

    def w_vertices(self) -> list[tuple[int, int]]:
        return self.u_vertices()

    def has_edge(self, u: tuple[int, int], w: tuple[int, int]) -> bool:
        return w in self._adj_u.get(u, ())

    def neighbors_of_u(self, u: tuple[int, int]) -> list:
        return self._adj_u.get(u, [])

    def neighbors_of_w(self, w: tuple[int, int]) -> list:
        return self._adj_w.get(w, [])


def build_auxiliary(coloring: BipartiteColoring) -> AuxiliaryGraph:
    """Materialize F, bucketing edges of K_{n,n} by color.

    A same-color pair {(i,k), (j,l)} becomes the F-edge ((i,j), (k,l))
    only when its row and column orders agree (i > j and k > l after
    swapping); pairs sharing a vertex or crossing never do.  Every
    materialized edge is recheck-verified against the color matrix.
    Runs in O(sum of bucket sizes squared).
    """
    if coloring.n < 2:
        raise ValueError("need n >= 2 for the pair graph")
    buckets: dict[int, list[tuple[int, int]]] = {}
    for i in range(coloring.n):
        row = coloring.colors[i]
        for k in range(coloring.n):
            buckets.setdefault(int(row[k]), []).append((i, k))
    edges = []
    for positions in buckets.values():
        for (i, k), (j, l) in combinations(positions, 2):
            if i == j or k == l:
                continue
            if (i > j) != (k > l):
                continue  # crossed pair, not an F-edge under the rule
            if i > j:
                edges.append(((i, j), (k, l)))
            else:
                edges.append(((j, i), (l, k)))
    for (i, j), (k, l) in edges:
        if coloring.color(i, k) != coloring.color(j, l):
            raise AssertionError(
                "pair-graph edge ((%d,%d),(%d,%d)) fails its color equality"
                % (i, j, k, l)
            )
    return AuxiliaryGraph(coloring, edges)


@dataclass(frozen=True)
class PairCountReport:
    n: int
    color_count: int
    same_color_pairs: int
    aux_edge_count: int
    bound_exact: Fraction
    bound_asymptotic: Fraction
    asymptotic_bound_holds: bool
    counting_gap: int  # same_color_pairs - aux_edge_count, >= 0

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "color_count": self.color_count,
            "same_color_pairs": self.same_color_pairs,
            "aux_edge_count": self.aux_edge_count,
            "bound_exact": str(self.bound_exact),
            "bound_asymptotic": str(self.bound_asymptotic),
            "asymptotic_bound_holds": self.asymptotic_bound_holds,
            "counting_gap": self.counting_gap,
        }


def pair_count(coloring: BipartiteColoring) -> PairCountReport:
    """Same-color pair totals against the convexity lower bound.

    Counts sum_c C(e_c, 2) exactly and compares it with two rational
    bounds: the exact convexity form n^2 (n^2 - |C|) / (2 |C|), which is
    asserted (it is a theorem, a violation is a bug), and the asymptotic
    n^4 / (4 |C|) form, which can fail for small n and is only flagged.
    The pair-graph edge count rides along so the gap between the two
    countings is visible in one place.
    """
    if coloring.n < 1:
        raise ValueError("need n >= 1")
    _, counts = np.unique(coloring.colors, return_counts=True)
    pairs = int(sum(int(e) * (int(e) - 1) // 2 for e in counts))
    m = coloring.n**2
    n_colors = int(counts.size)
    bound_exact = Fraction(m * (m - n_colors), 2 * n_colors)
    bound_asymptotic = Fraction(m * m, 4 * n_colors)
    if pairs < bound_exact:
        raise AssertionError(
            "convexity bound violated: %d pairs < %s" % (pairs, bound_exact)
        )
    aux_edges = (
        build_auxiliary(coloring).edge_count if coloring.n >= 2 else 0
    )
    return PairCountReport(
        n=coloring.n,
        color_count=n_colors,
        same_color_pairs=pairs,
        aux_edge_count=aux_edges,
        bound_exact=bound_exact,
        bound_asymptotic=bound_asymptotic,
        asymptotic_bound_holds=pairs >= bound_asymptotic,
        counting_gap=pairs - aux_edges,
    )


@dataclass(frozen=True)
class PatternGraph:
    """A bipartite pattern H with parts of size h1 and h2.

    Edges go between part one and part two, as (i, j) index pairs.
    """

    h1: int
    h2: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.h1 < 1 or self.h2 < 1:
            raise InvalidPatternError("both parts must be non-empty")
        seen = set()
        for i, j in self.edges:
            if not (0 <= i < self.h1 and 0 <= j < self.h2):
                raise InvalidPatternError("edge (%d, %d) out of range" % (i, j))
            if (i, j) in seen:
                raise InvalidPatternError("duplicate edge (%d, %d)" % (i, j))
            seen.add((i, j))
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @staticmethod
    def single_edge() -> "PatternGraph":
        return PatternGraph(1, 1, ((0, 0),))

    @staticmethod
    def complete(m: int, l: int) -> "PatternGraph":
        """K_{m,l}."""
        return PatternGraph(m, l, tuple(product(range(m), range(l))))

    @staticmethod
    def even_cycle(s: int) -> "PatternGraph":
        """C_s for even s >= 4, alternating between the parts."""
        if s < 4 or s % 2:
            raise InvalidPatternError("even_cycle needs even s >= 4")
        half = s // 2
        edges = []
        for i in range(half):
            edges.append((i, i))
            edges.append(((i + 1) % half, i))
        return PatternGraph(half, half, tuple(edges))

    @staticmethod
    def subdivided_clique(r: int) -> "PatternGraph":
        """K_r with every edge subdivided once; originals in part one."""
        if r < 2:
            raise InvalidPatternError("subdivided_clique needs r >= 2")
        edges = []
        for idx, (i, j) in enumerate(combinations(range(r), 2)):
            edges.append((i, idx))
            edges.append((j, idx))
        return PatternGraph(r, r * (r - 1) // 2, tuple(edges))

    @staticmethod
    def subdivided_complete_bipartite(m1: int, m2: int) -> "PatternGraph":
        """K_{m1,m2} with every edge subdivided once."""
        if m1 < 1 or m2 < 1:
            raise InvalidPatternError("parts must be non-empty")
        edges = []
        for idx, (i, j) in enumerate(product(range(m1), range(m2))):
            edges.append((i, idx))
            edges.append((m1 + j, idx))
        return PatternGraph(m1 + m2, m1 * m2, tuple(edges))


@dataclass(frozen=True)
class Embedding:
    """A part-respecting injective embedding of a pattern into F."""

    pattern: PatternGraph
    h1_map: tuple[tuple[int, int], ...]
    h2_map: tuple[tuple[int, int], ...]

    def check_against(self, graph: AuxiliaryGraph) -> None:
        if len(set(self.h1_map)) != self.pattern.h1:
            raise ValueError("part-one map is not injective")
        if len(set(self.h2_map)) != self.pattern.h2:
            raise ValueError("part-two map is not injective")
        for i, j in self.pattern.edges:
            if not graph.has_edge(self.h1_map[i], self.h2_map[j]):
                raise ValueError(
                    "pattern edge (%d, %d) has no image edge" % (i, j)
                )


@dataclass(frozen=True)
class PatternSearchResult:
    status: str  # "found" | "absent" | "indeterminate"
    embedding: Embedding | None
    nodes: int


_PART_LIMIT = 6


def find_pattern(
    graph: AuxiliaryGraph, pattern: PatternGraph, budget: int = 500_000
) -> PatternSearchResult:
    """Backtracking search for the pattern inside the pair graph.

    Pattern vertices are assigned in descending degree order; candidates
    must match every already-assigned neighbor.  The search is exact
    within its node budget: "absent" means exhausted, never truncated,
    while running out of budget yields an explicit "indeterminate".
    Parts beyond 6 vertices are refused; that is the regime the search
    is meant for.
    """
    if pattern.h1 > _PART_LIMIT or pattern.h2 > _PART_LIMIT:
        raise InvalidPatternError(
            "pattern parts up to %d vertices only" % _PART_LIMIT
        )
    deg1 = [0] * pattern.h1
    deg2 = [0] * pattern.h2
    adj1: list[list[int]] = [[] for _ in range(pattern.h1)]
    adj2: list[list[int]] = [[] for _ in range(pattern.h2)]
    for i, j in pattern.edges:
        deg1[i] += 1
        deg2[j] += 1
        adj1[i].append(j)
        adj2[j].append(i)
    order = sorted(
        [("u", i) for i in range(pattern.h1)]
        + [("w", j) for j in range(pattern.h2)],
        key=lambda v: (-(deg1[v[1]] if v[0] == "u" else deg2[v[1]]), v[0], v[1]),
    )
    u_pool = graph.u_vertices()
    w_pool = graph.w_vertices()
    assign_u: dict[int, tuple] = {}
    assign_w: dict[int, tuple] = {}
    nodes = 0

    def candidates(part: str, idx: int) -> list:
        if part == "u":
            anchors = [
                set(graph.neighbors_of_w(assign_w[j]))
                for j in adj1[idx]
                if j in assign_w
            ]
            pool = sorted(anchors[0]) if anchors else u_pool
            taken = set(assign_u.values())
        else:
            anchors = [
                set(graph.neighbors_of_u(assign_u[i]))
                for i in adj2[idx]
                if i in assign_u
            ]
            pool = sorted(anchors[0]) if anchors else w_pool
            taken = set(assign_w.values())
        rest = anchors[1:]
        return [
            v for v in pool
            if v not in taken and all(v in anchor for anchor in rest)
        ]

    def extend(depth: int) -> bool | None:
        """True = found, False = exhausted, None = budget hit."""
        nonlocal nodes
        if depth == len(order):
            return True
        part, idx = order[depth]
        for vertex in candidates(part, idx):
            nodes += 1
            if nodes > budget:
                return None
            store = assign_u if part == "u" else assign_w
            store[idx] = vertex
            result = extend(depth + 1)
            if result:
                return True
            del store[idx]
            if result is None:
                return None
        return False

    result = extend(0)
    if result is None:
        return PatternSearchResult("indeterminate", None, nodes)
    if not result:
        return PatternSearchResult("absent", None, nodes)
    embedding = Embedding(
        pattern,
        tuple(assign_u[i] for i in range(pattern.h1)),
        tuple(assign_w[j] for j in range(pattern.h2)),
    )
    embedding.check_against(graph)
    return PatternSearchResult("found", embedding, nodes)


@dataclass(frozen=True)
class KstCertificate:
    """A K_{s,t} whose distinct-color count is capped by st - e(H)."""

    s: int
    t: int
    row_vertices: tuple[int, ...]
    col_vertices: tuple[int, ...]
    distinct_colors: int
    bound: int

    @property
    def passed(self) -> bool:
        return self.distinct_colors <= self.bound

    def as_dict(self) -> dict:
        return {
            "s": self.s,
            "t": self.t,
            "S": list(self.row_vertices),
            "T": list(self.col_vertices),
            "distinct_colors": self.distinct_colors,
            "bound": self.bound,
            "pass": self.passed,
        }


def certify_kst(
    embedding: Embedding, coloring: BipartiteColoring, s: int, t: int
) -> KstCertificate:
    """Extend an embedding's footprint to an explicit K_{s,t} certificate.

    The pattern's part sizes must satisfy |H1| <= floor(s/2) and
    |H2| <= floor(t/2), so the at most 2|H1| row and 2|H2| column
    vertices spanned by the embedding extend (with smallest unused
    labels, for determinism) to s rows and t columns inside K_{n,n}.
    The certificate records the induced distinct-color count; each
    pattern edge pins one color coincidence, which is what caps the
    count at st - e(H).
    """
    pattern = embedding.pattern
    if 2 * pattern.h1 > s:
        raise InvalidPatternError(
            "part one has %d vertices; needs |H1| <= floor(s/2) = %d"
            % (pattern.h1, s // 2)
        )
    if 2 * pattern.h2 > t:
        raise InvalidPatternError(
            "part two has %d vertices; needs |H2| <= floor(t/2) = %d"
            % (pattern.h2, t // 2)
        )
    n = coloring.n
    if s > n or t > n:
        raise InvalidPatternError(
            "K_{%d,%d} does not fit in K_{%d,%d}" % (s, t, n, n)
        )
    for i, j in pattern.edges:
        (r1, r2), (c1, c2) = embedding.h1_map[i], embedding.h2_map[j]
        if coloring.color(r1, c1) != coloring.color(r2, c2):
            raise ValueError(
                "embedding edge ((%d,%d),(%d,%d)) violates its color equality"
                % (r1, r2, c1, c2)
            )
    rows = sorted({v for pair in embedding.h1_map for v in pair})
    cols = sorted({v for pair in embedding.h2_map for v in pair})
    rows = _extend(rows, s, n)
    cols = _extend(cols, t, n)
    sub = coloring.colors[np.ix_(rows, cols)]
    distinct = int(np.unique(sub).size)
    return KstCertificate(
        s=s,
        t=t,
        row_vertices=tuple(rows),
        col_vertices=tuple(cols),
        distinct_colors=distinct,
        bound=s * t - pattern.edge_count,
    )


def _extend(chosen: list[int], target: int, n: int) -> list[int]:
    have = set(chosen)
    out = list(chosen)
    label = 0
    while len(out) < target:
        if label not in have:
            out.append(label)
            have.add(label)
        label += 1
    return sorted(out)


@dataclass(frozen=True)
class ExponentBound:
    """q and the exponent in: colorings with < q colors on every K_{s,t}
    admit Omega(n^exponent) colors overall."""

    s: int
    t: int
    q: int
    alpha: Fraction
    exponent: Fraction

    def as_dict(self) -> dict:
        return {
            "s": self.s,
            "t": self.t,
            "q": self.q,
            "alpha": str(self.alpha),
            "exponent": str(self.exponent),
        }


def bound_exponent(
    s: int,
    t: int,
    alpha: Fraction,
    h1_size: int,
    h2_size: int,
    h_edges: int,
) -> ExponentBound:
    """q = st - e(H) + 1 and the lower-bound exponent 4 - 2 alpha.

    alpha is the Turan exponent of the pattern, ex(m, H) = Theta(m^alpha),
    supplied by the caller as an exact rational; the n^4 / ex(n^2, H)
    count then has exponent 4 - 2 alpha.  Preconditions are validated
    and named individually.
    """
    alpha = Fraction(alpha)
    if not t >= s >= 4:
        raise InvalidParametersError("need t >= s >= 4, got s=%d t=%d" % (s, t))
    if h1_size > s // 2:
        raise InvalidParametersError(
            "need |H1| <= floor(s/2): %d > %d" % (h1_size, s // 2)
        )
    if h2_size > t // 2:
        raise InvalidParametersError(
            "need |H2| <= floor(t/2): %d > %d" % (h2_size, t // 2)
        )
    if not 1 <= alpha <= 2:
        raise InvalidParametersError("need 1 <= alpha <= 2, got %s" % alpha)
    if not 1 <= h_edges <= h1_size * h2_size:
        raise InvalidParametersError(
            "need 1 <= e(H) <= |H1| |H2|, got %d" % h_edges
        )
    return ExponentBound(
        s=s,
        t=t,
        q=s * t - h_edges + 1,
        alpha=alpha,
        exponent=Fraction(4) - 2 * alpha,
    )
