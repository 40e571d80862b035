"""Prime field arithmetic.

Everything in this package works over F_p for a prime p = 5 (mod 6).
That congruence does two jobs at once: p = 2 (mod 3) makes -3 a
quadratic non-residue (so the quadratic form x^2 + xy + y^2 never
vanishes on distinct nonzero arguments), and p odd lets us halve.
Field elements are plain Python ints in [0, p); the helpers here do
primality testing, inversion, quadratic residue tests and modular
square roots.
"""

from __future__ import annotations

from dataclasses import dataclass

# Strong pseudoprime witnesses sufficient for every n < 3.3 * 10^24
# (covers the full 64-bit range we accept).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

MAX_MODULUS = 2**64


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 2**64."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    # write n - 1 = d * 2^s with d odd
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def mod_inverse(a: int, p: int) -> int:
    """Inverse of a modulo the prime p; raises on a = 0 (mod p)."""
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse mod %d" % p)
    return pow(a, p - 2, p)


def is_quadratic_residue(a: int, p: int) -> bool:
    """Euler criterion: is a a nonzero square mod the odd prime p?

    Raises ValueError for a = 0 (mod p); zero is neither a residue nor
    a non-residue here, callers must decide what 0 means for them.
    """
    a %= p
    if a == 0:
        raise ValueError("quadratic residue test is for nonzero elements")
    return pow(a, (p - 1) // 2, p) == 1


def sqrt_mod(a: int, p: int) -> tuple[int, ...] | None:
    """All square roots of a modulo the odd prime p.

    Returns (0,) for a = 0, the pair (r, p - r) sorted ascending when a
    is a nonzero residue, and None when a is a non-residue.  Uses the
    p = 3 (mod 4) shortcut when available and Tonelli-Shanks otherwise.
    """
    a %= p
    if a == 0:
        return (0,)
    if not is_quadratic_residue(a, p):
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        r = _tonelli_shanks(a, p)
    return (r, p - r) if r < p - r else (p - r, r)


def _tonelli_shanks(a: int, p: int) -> int:
    # p - 1 = q * 2^s with q odd; a is a known residue, p = 1 (mod 4)
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    # smallest non-residue as the group generator seed; dense enough
    # that a linear scan is fine
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m = s
    c = pow(z, q, p)
    t = pow(a, q, p)
    r = pow(a, (q + 1) // 2, p)
    while t != 1:
        # find least i with t^(2^i) = 1
        i = 0
        t2 = t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m = i
        c = b * b % p
        t = t * c % p
        r = r * b % p
    return r


@dataclass(frozen=True)
class PrimeField:
    """The field F_p.  Validates primality on construction."""

    p: int

    def __post_init__(self) -> None:
        if self.p >= MAX_MODULUS:
            raise OverflowError("modulus %d exceeds the supported 64-bit range" % self.p)
        if not is_prime(self.p):
            raise ValueError("%d is not prime" % self.p)

    @property
    def is_coloring_modulus(self) -> bool:
        """True when p = 5 (mod 6), the congruence the coloring needs."""
        return self.p % 6 == 5

    def element(self, v: int) -> int:
        return v % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        return mod_inverse(a, self.p)

    def sqrt(self, a: int) -> tuple[int, ...] | None:
        return sqrt_mod(a, self.p)

    def is_quadratic_residue(self, a: int) -> bool:
        return is_quadratic_residue(a, self.p)

    def __str__(self) -> str:
        return "F_%d" % self.p


def find_prime(lower_bound: int) -> PrimeField:
    """Smallest prime p >= lower_bound with p = 5 (mod 6).

    The bound must be at least 5 (the first such prime), and the search
    refuses to leave the 64-bit range the arithmetic is certified for.
    """
    if lower_bound < 5:
        raise ValueError("lower bound must be at least 5")
    candidate = lower_bound + (5 - lower_bound) % 6
    while candidate < MAX_MODULUS:
        if is_prime(candidate):
            return PrimeField(candidate)
        candidate += 6
    raise OverflowError("no suitable prime below 2**64 from %d" % lower_bound)


def primes_5_mod_6(low: int, high: int):
    """Yield every prime p = 5 (mod 6) with low <= p <= high, ascending."""
    candidate = max(low, 5)
    candidate += (5 - candidate) % 6
    while candidate <= high:
        if is_prime(candidate):
            yield candidate
        candidate += 6
