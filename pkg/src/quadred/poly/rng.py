"""Deterministic randomness: splitmix64 and random homogeneous forms."""

from .core import Polynomial
from .order import _grevlex_key

_MASK = (1 << 64) - 1


class RngState:
    """splitmix64 generator; identical output on every platform."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def next_mod(self, n: int) -> int:
        return self.next() % n

    def derive(self, salt: int = 0) -> "RngState":
        """Child generator; advances this one by a single draw."""
        return RngState((self.next() + salt) & _MASK)


def monomials_of_degree(nvars: int, degree: int):
    """All exponent tuples of the given total degree, largest first."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    if nvars == 0:
        return [()] if degree == 0 else []
    rec((), degree, nvars)
    out.sort(key=_grevlex_key, reverse=True)
    return out


def random_homogeneous(field, nvars: int, degree: int, rng: RngState) -> Polynomial:
    """Random homogeneous form over a prime field, determined entirely by rng.

    Each monomial consumes exactly one draw whether or not its coefficient is
    zero; the all-zero outcome is rejected and the whole form redrawn.
    """
    p = field.p
    if p is None:
        raise ValueError("random forms are defined over prime fields only")
    monos = monomials_of_degree(nvars, degree)
    while True:
        terms = {}
        for m in monos:
            c = rng.next() % p
            if c:
                terms[m] = c
        if terms:
            return Polynomial._raw(field, nvars, terms)
