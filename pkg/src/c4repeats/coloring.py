"""A proper edge coloring of K_n from the quadratic form x^2 + xy + y^2.

Vertices are the integers 1..a_max with a_max = (p - 1) / 3 for a prime
p = 5 (mod 6); the edge {x, y} gets the color x^2 + xy + y^2 mod p.
Because p = 2 (mod 3), -3 is a non-residue mod p, so the form has no
nontrivial zeros and every color is nonzero.  Properness comes from the
factorization

    (x^2 + xy + y^2) - (x^2 + xz + z^2) = (y - z)(x + y + z),

whose second factor cannot vanish: a sum of two or three distinct
vertices lies in [1, 3 * a_max] and 3 * a_max < p.

The coloring uses few colors, fewer than p - 1 of them on ~p^2 / 18
edges, yet no four colors a, b, c, d appear in order around more than
two four-cycles.  The scanner module checks that claim exhaustively.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field as dataclass_field
from typing import Iterator

import numpy as np

from .field import PrimeField


@dataclass(frozen=True)
class VertexSet:
    """The vertex range {1, ..., a_max} viewed inside F_p."""

    field: PrimeField
    a_max: int

    @property
    def n(self) -> int:
        return self.a_max


def build_vertex_set(field: PrimeField) -> VertexSet:
    if not field.is_coloring_modulus:
        raise ValueError("modulus must be 5 mod 6, got %d" % field.p)
    return VertexSet(field, (field.p - 1) // 3)


def color_edge(x: int, y: int, vertices: VertexSet) -> int:
    """Color of the edge {x, y}: x^2 + xy + y^2 mod p."""
    a_max = vertices.a_max
    if not (1 <= x <= a_max and 1 <= y <= a_max):
        raise ValueError("vertices must lie in [1, %d]" % a_max)
    if x == y:
        raise ValueError("no loops: x and y must differ")
    return (x * x + x * y + y * y) % vertices.field.p


@dataclass(frozen=True)
class EdgeColoring:
    """Dense symmetric color table for the complete graph on a VertexSet.

    table[x, y] holds the color of {x, y} for 1 <= x, y <= a_max,
    x != y; row and column 0 and the diagonal are zero filler.
    """

    vertices: VertexSet
    table: np.ndarray = dataclass_field(repr=False)

    @property
    def p(self) -> int:
        return self.vertices.field.p

    @property
    def a_max(self) -> int:
        return self.vertices.a_max

    @property
    def n_edges(self) -> int:
        return self.a_max * (self.a_max - 1) // 2

    def color_of(self, x: int, y: int) -> int:
        if not (1 <= x <= self.a_max and 1 <= y <= self.a_max) or x == y:
            raise ValueError("not an edge: (%d, %d)" % (x, y))
        return int(self.table[x, y])

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield (x, y, color) with x < y in lexicographic order."""
        for x in range(1, self.a_max + 1):
            row = self.table[x]
            for y in range(x + 1, self.a_max + 1):
                yield x, y, int(row[y])


def build_coloring(field: PrimeField) -> EdgeColoring:
    """Materialize the full color table for F_p, p = 5 (mod 6)."""
    vertices = build_vertex_set(field)
    idx = np.arange(vertices.a_max + 1, dtype=np.int64)
    x = idx[:, None]
    y = idx[None, :]
    table = (x * x + x * y + y * y) % field.p
    table[0, :] = 0
    table[:, 0] = 0
    np.fill_diagonal(table, 0)
    return EdgeColoring(vertices, table)


@dataclass(frozen=True)
class PropernessReport:
    p: int
    a_max: int
    n_edges: int
    proper: bool
    conflicts: tuple[tuple[int, int, int, int], ...]
    colors_nonzero: bool
    triple_sums_below_p: bool

    @property
    def passed(self) -> bool:
        return self.proper and self.colors_nonzero and self.triple_sums_below_p


def verify_proper(coloring: EdgeColoring) -> PropernessReport:
    """Check, vertex by vertex, that incident edges get distinct colors.

    Also confirms the two facts the proof leans on: every color is
    nonzero and 3 * a_max < p.  Conflicts (never expected) are reported
    as (x, y1, y2, color) tuples, not raised.
    """
    a_max = coloring.a_max
    p = coloring.p
    table = coloring.table
    conflicts: list[tuple[int, int, int, int]] = []
    nonzero = True
    for x in range(1, a_max + 1):
        others = np.concatenate((np.arange(1, x), np.arange(x + 1, a_max + 1)))
        if others.size == 0:
            continue
        colors = table[x, others]
        if np.any(colors == 0):
            nonzero = False
        order = np.argsort(colors, kind="stable")
        sorted_colors = colors[order]
        dup = np.flatnonzero(sorted_colors[1:] == sorted_colors[:-1])
        for i in dup:
            y1 = int(others[order[i]])
            y2 = int(others[order[i + 1]])
            conflicts.append((x, min(y1, y2), max(y1, y2), int(sorted_colors[i])))
    return PropernessReport(
        p=p,
        a_max=a_max,
        n_edges=coloring.n_edges,
        proper=not conflicts,
        conflicts=tuple(conflicts),
        colors_nonzero=nonzero,
        triple_sums_below_p=3 * a_max < p,
    )


@dataclass(frozen=True)
class ColorCensus:
    p: int
    a_max: int
    n_edges: int
    distinct_colors: int
    colors_per_vertex_ratio: float
    max_class_size: int
    class_sizes: tuple[tuple[int, int], ...]  # (color, count), ascending color


def census(coloring: EdgeColoring) -> ColorCensus:
    """Count distinct colors and class sizes over the (x < y) edges."""
    a_max = coloring.a_max
    iu = np.triu_indices(a_max + 1, k=1)
    mask = iu[0] >= 1
    values = coloring.table[iu[0][mask], iu[1][mask]]
    colors, counts = np.unique(values, return_counts=True)
    return ColorCensus(
        p=coloring.p,
        a_max=a_max,
        n_edges=coloring.n_edges,
        distinct_colors=int(colors.size),
        colors_per_vertex_ratio=float(colors.size / a_max) if a_max else 0.0,
        max_class_size=int(counts.max()) if counts.size else 0,
        class_sizes=tuple(
            (int(c), int(k)) for c, k in zip(colors.tolist(), counts.tolist())
        ),
    )


def coloring_to_dict(coloring: EdgeColoring) -> dict:
    """JSON-ready dict: {"p": ..., "a_max": ..., "edges": [{x, y, color}]}."""
    return {
        "p": coloring.p,
        "a_max": coloring.a_max,
        "edges": [
            {"x": x, "y": y, "color": c} for x, y, c in coloring.edges()
        ],
    }


def coloring_to_json(coloring: EdgeColoring) -> str:
    return json.dumps(coloring_to_dict(coloring), indent=2, sort_keys=True) + "\n"


def coloring_from_dict(data: dict) -> EdgeColoring:
    """Rebuild a coloring from its JSON dict, verifying every edge value."""
    field = PrimeField(int(data["p"]))
    coloring = build_coloring(field)
    if int(data["a_max"]) != coloring.a_max:
        raise ValueError(
            "a_max %s does not match (p - 1) / 3 = %d"
            % (data["a_max"], coloring.a_max)
        )
    seen = set()
    for edge in data["edges"]:
        x, y, c = int(edge["x"]), int(edge["y"]), int(edge["color"])
        if coloring.color_of(x, y) != c:
            raise ValueError("edge (%d, %d) carries color %d, expected %d"
                             % (x, y, c, coloring.color_of(x, y)))
        seen.add((min(x, y), max(x, y)))
    if len(seen) != coloring.n_edges:
        raise ValueError(
            "expected %d distinct edges, got %d" % (coloring.n_edges, len(seen))
        )
    return coloring


def coloring_from_json(text: str) -> EdgeColoring:
    return coloring_from_dict(json.loads(text))


def coloring_to_csv(coloring: EdgeColoring) -> str:
    """CSV with header x,y,color, rows in lexicographic edge order."""
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x", "y", "color"])
    for x, y, c in coloring.edges():
        writer.writerow([x, y, c])
    return buf.getvalue()
