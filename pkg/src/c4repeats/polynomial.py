"""Univariate polynomial arithmetic over a prime field.

Coefficients are stored in ascending order of degree, reduced mod p,
with trailing zeros stripped, so the representation of each residue
class is unique.  The module exists for one consumer: deciding whether
two specialized quadratics share a root, which is a resultant-vanishing
question.  Both routes to that answer live here, the Sylvester
determinant and a Euclidean gcd, so each can check the other.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .field import is_prime, mod_inverse


class Poly:
    """A polynomial over F_p.  coeffs[i] is the coefficient of x^i."""

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs, p: int):
        reduced = [c % p for c in coeffs]
        while reduced and reduced[-1] == 0:
            reduced.pop()
        self.coeffs = tuple(reduced)
        self.p = p

    def degree(self) -> int:
        """Degree, with -1 standing in for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.coeffs, self.p))

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[i] = c
        for i, c in enumerate(other.coeffs):
            out[i] = (out[i] + c) % self.p
        return Poly(out, self.p)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[i] = c
        for i, c in enumerate(other.coeffs):
            out[i] = (out[i] - c) % self.p
        return Poly(out, self.p)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly([], self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = (out[i + j] + a * b) % self.p
        return Poly(out, self.p)

    def scale(self, k: int) -> "Poly":
        return Poly([c * k for c in self.coeffs], self.p)

    def __divmod__(self, other: "Poly"):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        quo = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        inv_lead = mod_inverse(other.leading(), p)
        d = other.degree()
        for i in range(len(rem) - 1, d - 1, -1):
            if rem[i] == 0:
                continue
            factor = rem[i] * inv_lead % p
            quo[i - d] = factor
            for j, c in enumerate(other.coeffs):
                rem[i - d + j] = (rem[i - d + j] - factor * c) % p
        return Poly(quo, p), Poly(rem, p)

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(mod_inverse(self.leading(), self.p))

    def _check(self, other: "Poly") -> None:
        if self.p != other.p:
            raise ValueError("mixed moduli: %d vs %d" % (self.p, other.p))

    def __repr__(self) -> str:
        return "Poly(%r, p=%d)" % (list(self.coeffs), self.p)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    if f.p != g.p:
        raise ValueError("mixed moduli")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def sylvester_matrix(f: Poly, g: Poly) -> list[list[int]]:
    """The (m+n) x (m+n) Sylvester matrix of f and g, m = deg f, n = deg g.

    Rows hold the coefficients in descending order: n shifted copies of
    f followed by m shifted copies of g.  Requires both polynomials
    nonzero and at least one of positive degree.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("Sylvester matrix needs nonzero polynomials")
    m, n = f.degree(), g.degree()
    if m == 0 and n == 0:
        raise ValueError("at least one polynomial must have positive degree")
    size = m + n
    fd = list(reversed(f.coeffs))
    gd = list(reversed(g.coeffs))
    rows = []
    for shift in range(n):
        row = [0] * size
        row[shift : shift + m + 1] = fd
        rows.append(row)
    for shift in range(m):
        row = [0] * size
        row[shift : shift + n + 1] = gd
        rows.append(row)
    return rows


def determinant_mod(matrix: list[list[int]], p: int) -> int:
    """Determinant over F_p by Gaussian elimination with row pivoting."""
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix must be square")
    a = [[v % p for v in row] for row in matrix]
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det % p
        det = det * a[col][col] % p
        inv = mod_inverse(a[col][col], p)
        for r in range(col + 1, n):
            if a[r][col] == 0:
                continue
            factor = a[r][col] * inv % p
            for c in range(col, n):
                a[r][c] = (a[r][c] - factor * a[col][c]) % p
    return det


def resultant(f: Poly, g: Poly) -> int:
    """res(f, g) in F_p, as the Sylvester determinant.

    Vanishes exactly when f and g share a root in the algebraic
    closure, i.e. when deg gcd(f, g) >= 1.
    """
    return determinant_mod(sylvester_matrix(f, g), f.p)


def resultant_euclid(f: Poly, g: Poly) -> int:
    """res(f, g) by the remainder-sequence recurrence.

    Independent of the Sylvester route; used to cross-check it.
    Same preconditions as sylvester_matrix.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant needs nonzero polynomials")
    if f.degree() == 0 and g.degree() == 0:
        raise ValueError("at least one polynomial must have positive degree")
    p = f.p
    # res(f, g) with deg f = m, deg g = n, r = f mod g:
    #   res(f, g) = (-1)^(mn) * lc(g)^(m - deg r) * res(g, r)
    # bottoming out at res(g, const) = const^(deg g).
    a, b = f, g
    acc = 1
    while True:
        m, n = a.degree(), b.degree()
        if n == 0:
            return acc * pow(b.coeffs[0], m, p) % p
        r = a % b
        if r.is_zero():
            return 0
        sign = p - 1 if (m * n) % 2 else 1
        acc = acc * sign % p
        acc = acc * pow(b.leading(), m - r.degree(), p) % p
        a, b = b, r


# ---------------------------------------------------------------------------
# Pointwise validation of the elimination chain behind the cycle solver.
#
# The solver differences the four cycle-color equations down to a
# biquadratic in v = x - z.  Every step is a polynomial identity, so it
# can be certified numerically: generate a cycle forward from random
# (x, y, z, w), compute its colors, and check that each derived
# relation vanishes exactly.  The two specialized-quadratic pairs that
# the eliminations of y and w come from are additionally cross-checked
# through the resultant: a shared root forces res = 0, and res = 0 is
# equivalent to a nonconstant gcd.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EliminationReport:
    p: int
    trials: int
    generic: int
    degenerate: int
    resultant_pairs: int
    identity_failures: tuple[dict, ...]
    resultant_failures: tuple[dict, ...]

    @property
    def passed(self) -> bool:
        return not self.identity_failures and not self.resultant_failures

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "trials": self.trials,
            "generic": self.generic,
            "degenerate": self.degenerate,
            "resultant_pairs": self.resultant_pairs,
            "identity_failures": list(self.identity_failures),
            "resultant_failures": list(self.resultant_failures),
            "pass": self.passed,
        }


def verify_elimination_identities(
    p: int, trials: int, seed: int = 0
) -> EliminationReport:
    """Certify the solver's elimination chain on random forward tuples.

    Each trial draws (x, y, z, w) over F_p with x != z, computes the
    four cycle colors, and checks exactly (all mod p):

      * the two even quartics in (u, v) obtained by eliminating y and
        then w;
      * on the generic branch a - b + c - d != 0, the linear relation
        for uv and the biquadratic in v with the solver's coefficients
        (the degenerate branch happens exactly when y = w, which the
        random tuples do hit, and is skipped as there is nothing to
        check);
      * res(f1, f2) = 0 for the specialized quadratics in y from the
        first two color equations, ditto in w for the last two, plus a
        perturbed pair where res = 0 must coincide with the gcd being
        nonconstant.

    Failures carry the offending tuple; zero are expected.
    """
    # Imported here so the (lower-level) polynomial module does not
    # depend on the solver at import time; the point of the check is to
    # exercise the solver's actual coefficient code, not a copy of it.
    from .solver import quartic_coefficient_values

    if p < 11 or not is_prime(p):
        raise ValueError("need a prime p >= 11, got %r" % p)
    rng = random.Random(seed)
    generic = 0
    degenerate = 0
    resultant_pairs = 0
    identity_failures: list[dict] = []
    resultant_failures: list[dict] = []

    def fail(bucket, tuple_, check):
        bucket.append({"tuple": list(tuple_), "check": check})

    for _ in range(trials):
        x = rng.randrange(p)
        z = rng.randrange(p)
        while z == x:
            z = rng.randrange(p)
        y = rng.randrange(p)
        w = rng.randrange(p)
        a = (x * x + x * y + y * y) % p
        b = (y * y + y * z + z * z) % p
        c = (z * z + z * w + w * w) % p
        d = (w * w + w * x + x * x) % p
        u = (x + z) % p
        v = (x - z) % p
        t = v * v % p
        uv = u * v % p
        tup = (x, y, z, w)

        # quartic in (u, v) from eliminating y
        eq_y = (t * t + 3 * u * u * t - 6 * (a - b) * uv
                - 2 * (a + b) * t + 4 * (a - b) * (a - b)) % p
        if eq_y:
            fail(identity_failures, tup, "quartic_after_y_elimination")
        # quartic in (u, v) from eliminating w
        eq_w = (t * t + 3 * u * u * t + 6 * (c - d) * uv
                - 2 * (c + d) * t + 4 * (c - d) * (c - d)) % p
        if eq_w:
            fail(identity_failures, tup, "quartic_after_w_elimination")

        s = (a - b + c - d) % p
        if s == 0:
            degenerate += 1
        else:
            generic += 1
            lin = (3 * s * uv - 2 * (a - b - c + d) * s
                   + (a + b - c - d) * t) % p
            if lin:
                fail(identity_failures, tup, "uv_linear_relation")
            c4, c2, c0 = quartic_coefficient_values(a, b, c, d, p)
            if (c4 * t * t + c2 * t + c0) % p:
                fail(identity_failures, tup, "biquadratic_in_v")

        # resultant cross-checks on the specialized quadratics
        f1 = Poly([x * x - a, x, 1], p)
        f2 = Poly([z * z - b, z, 1], p)
        if resultant(f1, f2) != 0:
            fail(resultant_failures, tup, "shared_root_y_resultant")
        f3 = Poly([z * z - c, z, 1], p)
        f4 = Poly([x * x - d, x, 1], p)
        if resultant(f3, f4) != 0:
            fail(resultant_failures, tup, "shared_root_w_resultant")
        # perturb one constant term: res = 0 must track gcd nonconstant
        g2 = Poly([z * z - b + rng.randrange(1, p), z, 1], p)
        vanishes = resultant(f1, g2) == 0
        shares = poly_gcd(f1, g2).degree() >= 1
        if vanishes != shares:
            fail(resultant_failures, tup, "perturbed_resultant_gcd_mismatch")
        resultant_pairs += 3

    return EliminationReport(
        p=p,
        trials=trials,
        generic=generic,
        degenerate=degenerate,
        resultant_pairs=resultant_pairs,
        identity_failures=tuple(identity_failures),
        resultant_failures=tuple(resultant_failures),
    )
