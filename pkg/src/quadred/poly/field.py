"""Coefficient fields: the rationals, or a prime field F_p with 2 < p < 2**62."""

from fractions import Fraction

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 2**62."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    # Sinclair's base set: deterministic for n < 3.3 * 10**24
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FieldSpec:
    """Either the rationals (p is None) or F_p for a checked prime p.

    Rational coefficients are `Fraction`; prime-field coefficients are ints
    normalized into 0..p-1.
    """

    __slots__ = ("p",)

    def __init__(self, p=None):
        if p is not None:
            if not isinstance(p, int):
                raise TypeError("characteristic must be an int")
            if p <= 2 or p >= 1 << 62:
                raise ValueError(f"prime out of range (2, 2^62): {p}")
            if not is_prime(p):
                raise ValueError(f"not a prime: {p}")
        self.p = p

    @property
    def is_prime_field(self):
        return self.p is not None

    def zero(self):
        return 0 if self.p is not None else Fraction(0)

    def one(self):
        return 1 if self.p is not None else Fraction(1)

    def coerce(self, c):
        """Bring an int/Fraction into this field's canonical representation."""
        if self.p is None:
            return Fraction(c)
        if isinstance(c, Fraction):
            if c.denominator == 1:
                return c.numerator % self.p
            return c.numerator % self.p * pow(c.denominator, self.p - 2, self.p) % self.p
        return c % self.p

    def neg(self, c):
        return -c % self.p if self.p is not None else -c

    def inv(self, c):
        if self.p is None:
            if c == 0:
                raise ZeroDivisionError("inverse of 0")
            return 1 / Fraction(c)
        c %= self.p
        if c == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(c, self.p - 2, self.p)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.p == other.p

    def __hash__(self):
        return hash(("FieldSpec", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


QQ = FieldSpec()


def prime_field(p: int) -> FieldSpec:
    return FieldSpec(p)
