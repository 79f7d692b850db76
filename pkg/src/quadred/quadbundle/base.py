"""Base varieties for graded quadratic forms.

A base is a projective space, a smooth hyperplane section of the Plucker
quadric of Gr(2,4) (a quadric threefold), or an affine chart of one of
these.  Chart objects carry the local coordinate names and the relation
polynomial cutting the variety inside the affine cell.
"""

from ..poly import Polynomial

GR24_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
PLUCKER_NAMES = ("p01", "p02", "p03", "p12", "p13", "p23")


def plucker_pfaffian(ell, field):
    """Pfaffian pairing of a 6-coefficient hyperplane with itself.

    Nonzero exactly when the hyperplane section of Gr(2,4) is smooth.
    """
    if len(ell) != 6:
        raise ValueError("expected 6 hyperplane coefficients")
    a = ell[0] * ell[5] - ell[1] * ell[4] + ell[2] * ell[3]
    p = field.p
    return a % p if p is not None else a


def compose_plucker(terms, chart):
    """Evaluate a polynomial in the six Plucker coordinates (exponent tuple
    -> coefficient) on a chart's Plucker parametrization."""
    field = chart.field
    ps = chart.plucker()
    out = Polynomial.zero(field, 4)
    for expo, c in terms.items():
        term = Polynomial.constant(field, 4, c)
        for k, e in enumerate(expo):
            for _ in range(e):
                term = term * ps[k]
        out = out + term
    return out


class ProjSpace:
    """P^n with homogeneous coordinates x0..xn."""

    kind = "ProjSpace"
    is_chart = False

    def __init__(self, n, field):
        if n < 1:
            raise ValueError("projective space needs n >= 1")
        self.n = n
        self.field = field
        self.names = tuple(f"x{i}" for i in range(n + 1))
        self.nvars = n + 1

    def charts(self):
        return [ProjSpaceChart(self.n, i, self.field) for i in range(self.n + 1)]

    def __repr__(self):
        return f"ProjSpace({self.n})"


class ProjSpaceChart:
    """The cell x_index = 1 of P^n, with the remaining coordinates as
    affine variables."""

    kind = "ProjSpaceChart"
    is_chart = True

    def __init__(self, n, index, field):
        if not 0 <= index <= n:
            raise ValueError("chart index out of range")
        self.n = n
        self.index = index
        self.field = field
        self.names = tuple(f"x{i}" for i in range(n + 1) if i != index)
        self.nvars = n
        self.chart_id = str(index)
        self.relations = ()

    def restrict(self, poly):
        """Dehomogenize a polynomial in n+1 variables onto this cell."""
        if poly.nvars != self.n + 1:
            raise ValueError("polynomial does not live on the ambient space")
        return poly.substitute({self.index: 1}).drop_var(self.index)

    def charts(self):
        return [self]

    def __repr__(self):
        return f"ProjSpaceChart({self.n}, {self.index})"


class Gr24Chart:
    """The cell p_ij = 1 of Gr(2,4), intersected with the hyperplane ell.

    The cell is parametrized by the 2x4 row matrix with identity in columns
    (i, j) and the four affine coordinates y1..y4 in the complementary
    columns; Plucker coordinates are its 2x2 minors, so the quadric relation
    holds identically and the only chart relation is the restriction of ell.
    """

    kind = "Gr24Chart"
    is_chart = True

    def __init__(self, pair, ell, field):
        pair = tuple(pair)
        if pair not in GR24_PAIRS:
            raise ValueError(f"chart pair must be one of {GR24_PAIRS}")
        self.pair = pair
        self.ell = tuple(field.coerce(c) for c in ell)
        self.field = field
        self.names = ("y1", "y2", "y3", "y4")
        self.nvars = 4
        self.chart_id = f"{pair[0]}{pair[1]}"
        rel = self.chart_relation()
        self.relations = () if rel.is_zero() else (rel,)

    def rows(self):
        """The two rows of the parametrizing 2x4 matrix, as polynomial
        4-vectors."""
        i, j = self.pair
        comp = [k for k in range(4) if k not in self.pair]
        zero = Polynomial.zero(self.field, 4)
        one = Polynomial.constant(self.field, 4, self.field.one())
        y = [Polynomial.variable(self.field, 4, k) for k in range(4)]
        u1 = [zero] * 4
        u2 = [zero] * 4
        u1[i] = one
        u2[j] = one
        u1[comp[0]], u1[comp[1]] = y[0], y[1]
        u2[comp[0]], u2[comp[1]] = y[2], y[3]
        return u1, u2

    def plucker(self):
        """All six Plucker coordinates as polynomials in y1..y4, in the
        sorted-pair order of PLUCKER_NAMES."""
        u1, u2 = self.rows()
        return tuple(u1[r] * u2[s] - u1[s] * u2[r] for r, s in GR24_PAIRS)

    def chart_relation(self):
        ps = self.plucker()
        out = Polynomial.zero(self.field, 4)
        for c, q in zip(self.ell, ps):
            out = out + q * c
        return out

    def charts(self):
        return [self]

    def __repr__(self):
        return f"Gr24Chart({self.pair})"


class QuadricInGr24:
    """The smooth hyperplane section {ell = 0} of Gr(2,4) in Plucker
    coordinates."""

    kind = "QuadricInGr24"
    is_chart = False

    def __init__(self, ell, field):
        self.ell = tuple(field.coerce(c) for c in ell)
        if len(self.ell) != 6:
            raise ValueError("expected 6 hyperplane coefficients")
        if plucker_pfaffian(self.ell, field) == 0:
            raise ValueError("hyperplane is tangent to the grassmannian")
        self.field = field
        self.names = PLUCKER_NAMES
        self.nvars = 6

    def charts(self):
        return [Gr24Chart(pair, self.ell, self.field) for pair in GR24_PAIRS]

    def plucker_quadric(self):
        """The Plucker relation p01*p23 - p02*p13 + p03*p12 in the ambient
        six coordinates."""
        v = [Polynomial.variable(self.field, 6, k) for k in range(6)]
        return v[0] * v[5] - v[1] * v[4] + v[2] * v[3]

    def hyperplane(self):
        v = [Polynomial.variable(self.field, 6, k) for k in range(6)]
        out = Polynomial.zero(self.field, 6)
        for c, q in zip(self.ell, v):
            out = out + q * c
        return out

    def __repr__(self):
        return f"QuadricInGr24({list(self.ell)})"
