"""Presented graded rings with a normalized degree-top integral."""

from fractions import Fraction

from ..poly import GREVLEX, QQ, GroebnerBasis, Polynomial, groebner, standard_monomials

RING_GB_BUDGET = 50_000_000


class ChowRing:
    """Quotient of QQ[gens] by weighted-homogeneous relations.

    The top graded piece (weighted degree = dim) must be one-dimensional; its
    standard-monomial generator, calibrated against the given point class,
    defines the integral.
    """

    __slots__ = ("names", "weights", "relations", "dim", "point_poly", "gb",
                 "m_top", "kappa", "nvars")

    def __init__(self, names, weights, relations, dim, point_poly):
        if len(names) != len(set(names)):
            raise ValueError("duplicate generator names")
        if len(weights) != len(names):
            raise ValueError("weights/names length mismatch")
        self.names = tuple(names)
        self.weights = tuple(weights)
        self.nvars = len(names)
        self.dim = dim
        for r in relations:
            hom, _ = r.is_homogeneous(weights=list(weights))
            if not hom:
                raise ValueError("relation is not weighted-homogeneous")
        self.relations = tuple(relations)
        self.gb = (groebner(relations, GREVLEX, budget=RING_GB_BUDGET)
                   if relations else GroebnerBasis([], GREVLEX))
        smons = standard_monomials(self.gb, self.nvars)
        tops = [m for m in smons
                if sum(e * w for e, w in zip(m, self.weights)) == dim]
        if len(tops) != 1:
            raise ValueError(f"top graded piece has dimension {len(tops)}, expected 1")
        self.m_top = tops[0]
        self.point_poly = point_poly
        kappa = self.nf(point_poly).terms.get(self.m_top, Fraction(0))
        if kappa == 0:
            raise ValueError("point class integrates to zero")
        self.kappa = Fraction(kappa)

    def wdeg(self, m):
        return sum(e * w for e, w in zip(m, self.weights))

    def truncate(self, poly: Polynomial) -> Polynomial:
        dim = self.dim
        kept = {m: c for m, c in poly.terms.items() if self.wdeg(m) <= dim}
        if len(kept) == len(poly.terms):
            return poly
        return Polynomial._raw(poly.field, poly.nvars, kept)

    def nf(self, poly: Polynomial) -> Polynomial:
        return self.gb.normal_form(self.truncate(poly))

    def reduce(self, poly: Polynomial) -> "ChowClass":
        return ChowClass(self, self.nf(poly))

    def zero(self):
        return ChowClass(self, Polynomial.zero(QQ, self.nvars))

    def const(self, c):
        return self.reduce(Polynomial.constant(QQ, self.nvars, Fraction(c)))

    def gen(self, i):
        return self.reduce(Polynomial.variable(QQ, self.nvars, i))

    def gen_by_name(self, name):
        return self.gen(self.names.index(name))

    def integral_raw(self, cls: "ChowClass") -> Fraction:
        if cls.ring is not self:
            raise ValueError("class belongs to a different ring")
        return Fraction(cls.poly.terms.get(self.m_top, 0)) / self.kappa

    def __repr__(self):
        return f"ChowRing({', '.join(self.names)}; dim {self.dim})"


class ChowClass:
    """Ring element kept in normal form; equality is componentwise."""

    __slots__ = ("ring", "poly")

    def __init__(self, ring: ChowRing, poly: Polynomial):
        self.ring = ring
        self.poly = poly

    def _coerce(self, other):
        if isinstance(other, ChowClass):
            if other.ring is not self.ring:
                raise ValueError("classes from different rings")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        return ChowClass(self.ring, self.poly + other.poly)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return ChowClass(self.ring, self.poly - other.poly)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return ChowClass(self.ring, -self.poly)

    def __mul__(self, other):
        if isinstance(other, ChowClass):
            if other.ring is not self.ring:
                raise ValueError("classes from different rings")
            return ChowClass(self.ring, self.ring.nf(self.poly * other.poly))
        return ChowClass(self.ring, self.poly * Fraction(other))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = self.ring.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def component(self, k):
        """Weighted-degree-k homogeneous part."""
        kept = {m: c for m, c in self.poly.terms.items() if self.ring.wdeg(m) == k}
        return ChowClass(self.ring, Polynomial._raw(QQ, self.ring.nvars, kept))

    def components(self, up_to=None):
        if up_to is None:
            up_to = self.ring.dim
        return [self.component(k) for k in range(up_to + 1)]

    def constant_part(self) -> Fraction:
        return Fraction(self.poly.terms.get((0,) * self.ring.nvars, 0))

    def is_zero(self):
        return self.poly.is_zero()

    def max_degree(self):
        return max((self.ring.wdeg(m) for m in self.poly.terms), default=0)

    def __eq__(self, other):
        return (isinstance(other, ChowClass) and other.ring is self.ring
                and other.poly == self.poly)

    def __hash__(self):
        return hash((id(self.ring), self.poly))

    def __repr__(self):
        from ..poly import poly_to_string
        try:
            s = poly_to_string(self.poly, list(self.ring.names))
        except ValueError:
            s = repr(dict(self.poly.terms))
        return f"<{s}>"
