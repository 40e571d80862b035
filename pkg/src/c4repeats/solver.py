"""Solve for four-cycles carrying a prescribed color sequence.

Given an ordered quadruple of colors (a, b, c, d), we look for cycles
(x, y, z, w) on the colored complete graph with

    x^2 + xy + y^2 = a        z^2 + zw + w^2 = c
    y^2 + yz + z^2 = b        w^2 + wx + x^2 = d      (all mod p).

Writing u = x + z and v = x - z, differencing adjacent equations
eliminates y and w:

    y = (a - b)/v - u,        w = -(c - d)/v - u,

and substituting back leaves two even quartics in (u, v).  Their
difference is linear in uv, namely

    3(a - b + c - d) uv = 2(a - b + c - d)(a - b - c + d)
                          - (a + b - c - d) v^2,

valid whenever s = a - b + c - d is nonzero.  (s equals v(y - w), so
s = 0 would force y = w; no cycle does that, and the degenerate branch
is empty.)  Eliminating u then yields a biquadratic in v,

    c4 v^4 + c2 v^2 + c0 = 0,

with at most four roots that come in +/- pairs.  Each pair recovers at
most one cycle whose corners lie in [1, a_max], because negating v
negates the whole candidate tuple, and x and p - x are never both
small.  Hence at most two cycles per ordered quadruple; the solver
raises if that bound ever breaks, and the scanner confirms it
exhaustively.

The three coefficients cannot all vanish on the generic branch:
c4/4 - c0/(4 s^2) = (a - c)(b - d), and following either case a = c or
b = d through the remaining two equations forces a = b, contradicting
the adjacent-distinctness every quadruple of cycle colors has.  That
collapse is therefore treated as an internal error, not a valid input.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .coloring import VertexSet
from .field import mod_inverse, sqrt_mod

# Full inverse/sqrt lookup tables are built below this modulus; above
# it every call falls back to modular exponentiation.
_TABLE_LIMIT = 1 << 20


class InvalidQuadrupleError(ValueError):
    """A color quadruple no proper coloring can realize on a cycle."""


class DegenerateBranchError(ValueError):
    """Raised when a - b + c - d = 0 and the elimination has no meaning."""


class CoefficientCollapseError(ArithmeticError):
    """All three biquadratic coefficients vanished; provably impossible."""


class RepeatBoundViolation(RuntimeError):
    """More than two cycles matched one ordered quadruple."""


@dataclass(frozen=True)
class BiquadraticCoefficients:
    """Coefficients of c4 v^4 + c2 v^2 + c0 over F_p."""

    c4: int
    c2: int
    c0: int


@dataclass(frozen=True, order=True)
class CycleSolution:
    """One cycle (x, y, z, w) plus the intermediates u = x + z, v = x - z."""

    x: int
    y: int
    z: int
    w: int
    u: int
    v: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.x, self.y, self.z, self.w)


def cycle_colors(x: int, y: int, z: int, w: int, p: int) -> tuple[int, int, int, int]:
    """Forward map: the four edge colors around the cycle (x, y, z, w)."""
    return (
        (x * x + x * y + y * y) % p,
        (y * y + y * z + z * z) % p,
        (z * z + z * w + w * w) % p,
        (w * w + w * x + x * x) % p,
    )


def validate_quadruple(quadruple: tuple[int, int, int, int], p: int) -> None:
    """Reject quadruples no cycle can carry: zero or adjacent-equal colors."""
    if len(quadruple) != 4:
        raise InvalidQuadrupleError("expected four colors, got %r" % (quadruple,))
    for value in quadruple:
        if not (1 <= value <= p - 1):
            raise InvalidQuadrupleError(
                "color %r outside [1, %d]" % (value, p - 1)
            )
    a, b, c, d = quadruple
    if a == b or b == c or c == d or d == a:
        raise InvalidQuadrupleError(
            "adjacent colors must differ, got %r" % (quadruple,)
        )


def quartic_coefficient_values(
    a: int, b: int, c: int, d: int, p: int
) -> tuple[int, int, int]:
    """(c4, c2, c0) of the biquadratic in v, with no input validation.

    These are polynomial identities in a, b, c, d, valid over any field
    of characteristic other than 2 and 3.  Still raises on the
    degenerate branch a - b + c - d = 0, where no biquadratic exists.
    """
    s = (a - b + c - d) % p
    if s == 0:
        raise DegenerateBranchError(
            "a - b + c - d = 0 (mod %d): degenerate branch" % p
        )
    c4 = (
        4
        * (a * a - a * b + a * c - 2 * a * d + b * b - 2 * b * c + b * d
           + c * c - c * d + d * d)
    ) % p
    c2 = (
        -4 * s * (a * a + a * c - b * b - b * d + c * c - d * d)
    ) % p
    c0 = (
        4 * s * s
        * (a * a - 2 * a * b + a * c - a * d + b * b - b * c + b * d
           + c * c - 2 * c * d + d * d)
    ) % p
    return c4, c2, c0


def quartic_coefficients(
    quadruple: tuple[int, int, int, int], p: int
) -> BiquadraticCoefficients:
    """Coefficients of the biquadratic in v = x - z for one quadruple.

    Requires the generic branch a - b + c - d != 0 (mod p); the
    degenerate branch has no biquadratic and raises instead.
    """
    validate_quadruple(quadruple, p)
    a, b, c, d = quadruple
    return BiquadraticCoefficients(*quartic_coefficient_values(a, b, c, d, p))


class CycleSolver:
    """Repeated quadruple queries against one coloring's vertex set.

    For moduli up to about a million the constructor precomputes inverse
    and square-root tables, which matters when cross-validation fires
    hundreds of thousands of queries.
    """

    def __init__(self, vertices: VertexSet):
        self.vertices = vertices
        p = vertices.field.p
        self.p = p
        self.a_max = vertices.a_max
        self._inv_2 = mod_inverse(2, p)
        if p <= _TABLE_LIMIT:
            inv = [0] * p
            inv[1] = 1
            for i in range(2, p):
                inv[i] = (p - p // i) * inv[p % i] % p
            self._inv_table = inv
            roots = [-1] * p
            roots[0] = 0
            for r in range(1, (p - 1) // 2 + 1):
                roots[r * r % p] = r
            self._sqrt_table = roots
        else:
            self._inv_table = None
            self._sqrt_table = None

    def _inv(self, a: int) -> int:
        if self._inv_table is not None:
            return self._inv_table[a]
        return mod_inverse(a, self.p)

    def _sqrt_small(self, a: int) -> int:
        """Smaller square root of a, or -1 when a is a non-residue."""
        if self._sqrt_table is not None:
            return self._sqrt_table[a]
        pair = sqrt_mod(a, self.p)
        return -1 if pair is None else pair[0]

    def biquadratic_roots(self, coeffs: BiquadraticCoefficients) -> tuple[int, ...]:
        """All v in F_p* with c4 v^4 + c2 v^2 + c0 = 0, sorted ascending.

        Substitutes t = v^2, solves the (possibly degenerate) quadratic
        in t, and takes square roots of the residue roots.  At most four
        values, closed under v -> p - v.
        """
        c4, c2, c0 = coeffs.c4, coeffs.c2, coeffs.c0
        if c4 == 0 and c2 == 0 and c0 == 0:
            raise CoefficientCollapseError(
                "all biquadratic coefficients are zero mod %d" % self.p
            )
        p = self.p
        out = []
        for t in self._quadratic_roots(c4, c2, c0):
            if t == 0:
                continue  # v = 0 never describes a cycle
            r = self._sqrt_small(t)
            if r > 0:
                out.append(r)
                out.append(p - r)
        out.sort()
        return tuple(out)

    def _quadratic_roots(self, c4: int, c2: int, c0: int) -> tuple[int, ...]:
        """Roots in t of c4 t^2 + c2 t + c0 over F_p (degree may drop)."""
        p = self.p
        if c4 == 0:
            if c2 == 0:
                return ()  # nonzero constant, no roots
            return ((-c0 * self._inv(c2)) % p,)
        disc = (c2 * c2 - 4 * c4 * c0) % p
        if disc == 0:
            return ((-c2 * self._inv(2 * c4 % p)) % p,)
        r = self._sqrt_small(disc)
        if r < 0:
            return ()
        inv_2c4 = self._inv(2 * c4 % p)
        return tuple(sorted(((-c2 + r) * inv_2c4 % p, (-c2 - r) * inv_2c4 % p)))

    def recover_cycle(
        self, v: int, quadruple: tuple[int, int, int, int]
    ) -> CycleSolution | None:
        """Candidate cycle from one root v, or None if any filter rejects it.

        u comes from the linear uv relation, then x = (u + v)/2,
        z = (u - v)/2, and y, w from the eliminated equations.  The
        candidate survives only if all four corners land in [1, a_max],
        are pairwise distinct, and the four color equations re-verify.
        """
        p = self.p
        a, b, c, d = quadruple
        s = (a - b + c - d) % p
        if v % p == 0:
            raise ValueError("v must be nonzero")
        if s == 0:
            raise DegenerateBranchError(
                "a - b + c - d = 0 (mod %d): degenerate branch" % p
            )
        lin = (a + b - c - d) % p
        con = 2 * (a - b - c + d) * s % p
        return self._recover(
            v % p, quadruple, self._inv(3 * s % p), lin, con,
            (a - b) % p, (c - d) % p,
        )

    def _recover(self, v, quadruple, inv_3s, lin, con, ab, cd):
        p = self.p
        a_max = self.a_max
        t = v * v % p
        uv = (con - lin * t) * inv_3s % p
        inv_v = self._inv(v)
        u = uv * inv_v % p
        x = (u + v) * self._inv_2 % p
        if not 1 <= x <= a_max:
            return None
        z = (u - v) * self._inv_2 % p
        if not 1 <= z <= a_max:
            return None
        y = (ab * inv_v - u) % p
        if not 1 <= y <= a_max:
            return None
        w = (-cd * inv_v - u) % p
        if not 1 <= w <= a_max:
            return None
        if x == y or x == z or x == w or y == z or y == w or z == w:
            return None
        if cycle_colors(x, y, z, w, p) != quadruple:
            return None
        return CycleSolution(x, y, z, w, u, v)

    def solve(
        self, quadruple: tuple[int, int, int, int]
    ) -> tuple[CycleSolution, ...]:
        """Every cycle with color sequence `quadruple`, sorted; at most two."""
        p = self.p
        validate_quadruple(quadruple, p)
        a, b, c, d = quadruple
        s = (a - b + c - d) % p
        if s == 0:
            # Degenerate branch: s = v(y - w) for any solution, and a
            # cycle has y != w, so there is nothing to find.
            return ()
        coeffs = BiquadraticCoefficients(
            *quartic_coefficient_values(a, b, c, d, p)
        )
        inv_3s = self._inv(3 * s % p)
        lin = (a + b - c - d) % p
        con = 2 * (a - b - c + d) * s % p
        ab = (a - b) % p
        cd = (c - d) % p
        solutions = []
        for v in self.biquadratic_roots(coeffs):
            candidate = self._recover(v, quadruple, inv_3s, lin, con, ab, cd)
            if candidate is not None:
                solutions.append(candidate)
        solutions.sort()
        if len(solutions) > 2:
            raise RepeatBoundViolation(
                "quadruple %r mod %d matched %d cycles: %r"
                % (quadruple, p, len(solutions), solutions)
            )
        return tuple(solutions)


@lru_cache(maxsize=8)
def _solver_for(vertices: VertexSet) -> CycleSolver:
    return CycleSolver(vertices)


def solve_quadruple(
    quadruple: tuple[int, int, int, int], vertices: VertexSet
) -> tuple[CycleSolution, ...]:
    """One-shot interface to CycleSolver.solve (solvers are cached)."""
    return _solver_for(vertices).solve(quadruple)
