"""Quadratic forms with values in a line bundle, graded by a sum of line
bundles on the base (plus a possible presentation by relation columns).

The Gram matrix M is symmetric with polynomial entries; entry (i, j) is a
section of O(t - d_i - d_j) where t is the twist and d the summand degrees.
A relation column r of weight w satisfies M r = 0 and has entries r_i of
degree d_i - w; it presents the form on the cokernel of r.

Forms over a projective base store one global entry matrix.  Forms whose
graded pieces only trivialize locally store one entry matrix per chart of
the base, in the chart coordinates.
"""

from ..poly import Polynomial, groebner

__all__ = [
    "GradedQuadraticForm",
    "IsotropicDirection",
    "is_isotropic",
    "orthogonality_divisor",
]


def _is_zero_mod(poly, gb):
    if gb is None:
        return poly.is_zero()
    return gb.normal_form(poly).is_zero()


def _chart_gb(chart):
    rels = getattr(chart, "relations", ())
    if not rels:
        return None
    return groebner(list(rels))


class IsotropicDirection:
    """A column vector v with M v well defined of weight w: component i is a
    polynomial of degree d_i - w (so constants in slot i force w = d_i)."""

    def __init__(self, weight, components):
        self.weight = weight
        self.components = tuple(components)

    @classmethod
    def coordinate(cls, form, index):
        """The index-th coordinate direction of a form, with the weight its
        grading dictates."""
        n = len(form.degrees)
        if not 0 <= index < n:
            raise ValueError("direction index out of range")
        zero = form.zero_poly()
        one = form.one_poly()
        comps = [one if i == index else zero for i in range(n)]
        return cls(form.degrees[index], comps)

    def unit_slot(self):
        """Index of a component that is a nonzero constant, or None."""
        for i, c in enumerate(self.components):
            if not c.is_zero() and c.total_degree() == 0:
                return i
        return None

    def __repr__(self):
        return f"IsotropicDirection(w={self.weight}, {list(self.components)})"


class GradedQuadraticForm:
    def __init__(self, base, degrees, twist, entries=None, chart_entries=None,
                 relations=(), field=None):
        self.base = base
        self.degrees = tuple(degrees)
        self.twist = twist
        self.field = field if field is not None else base.field
        n = len(self.degrees)
        if (entries is None) == (chart_entries is None):
            raise ValueError("give exactly one of entries or chart_entries")
        if entries is not None:
            self.entries = tuple(tuple(row) for row in entries)
            self.chart_entries = None
            self._check_shape(self.entries, base.nvars)
        else:
            self.entries = None
            self.chart_entries = {}
            chart_by_id = {c.chart_id: c for c in base.charts()}
            for cid, mat in chart_entries.items():
                if cid not in chart_by_id:
                    raise ValueError(f"unknown chart id {cid!r}")
                mat = tuple(tuple(row) for row in mat)
                self._check_shape(mat, chart_by_id[cid].nvars)
                self.chart_entries[cid] = mat
            if set(self.chart_entries) != set(chart_by_id):
                raise ValueError("chart entries must cover every chart")
        # each relation is (weight, components)
        self.relations = tuple(
            (w, tuple(comps)) for w, comps in relations
        )
        for w, comps in self.relations:
            if len(comps) != n:
                raise ValueError("relation column has wrong length")

    def _check_shape(self, mat, nvars):
        n = len(self.degrees)
        if len(mat) != n or any(len(row) != n for row in mat):
            raise ValueError("entry matrix shape does not match the grading")
        for row in mat:
            for p in row:
                if p.nvars != nvars:
                    raise ValueError("entry in the wrong polynomial ring")

    # -- conveniences ----------------------------------------------------

    @property
    def size(self):
        return len(self.degrees)

    def zero_poly(self):
        if self.entries is not None:
            nv = self.base.nvars
        else:
            nv = next(iter(self.chart_entries.values()))[0][0].nvars
        return Polynomial.zero(self.field, nv)

    def one_poly(self):
        z = self.zero_poly()
        return Polynomial.constant(self.field, z.nvars, self.field.one())

    def chart_matrices(self):
        """Yield (chart, matrix) pairs over every chart of the base, with
        global entries restricted where needed."""
        if self.entries is not None and self.base.is_chart:
            yield self.base, self.entries
            return
        for chart in self.base.charts():
            if self.entries is not None:
                mat = tuple(
                    tuple(chart.restrict(p) for p in row) for row in self.entries
                )
            else:
                mat = self.chart_entries[chart.chart_id]
            yield chart, mat

    def chart_relations(self):
        """Relation columns restricted to each chart, parallel to
        chart_matrices()."""
        if self.entries is not None and self.base.is_chart:
            yield self.base, list(self.relations)
            return
        for chart in self.base.charts():
            if self.entries is not None:
                cols = [
                    (w, tuple(chart.restrict(c) for c in comps))
                    for w, comps in self.relations
                ]
            else:
                cols = list(self.relations)
            yield chart, cols

    def entry_degree(self, i, j):
        return self.twist - self.degrees[i] - self.degrees[j]

    # -- validation ------------------------------------------------------

    def validate(self):
        """Check symmetry, the degree pattern, and that relation columns are
        annihilated.  Returns a list of human-readable problems; an empty
        list means the form is consistent."""
        problems = []
        n = self.size
        if self.entries is not None and not self.base.is_chart:
            mat = self.entries
            for i in range(n):
                for j in range(i, n):
                    if mat[i][j] != mat[j][i]:
                        problems.append(f"entry ({i}, {j}) is not symmetric")
                    d = self.entry_degree(i, j)
                    p = mat[i][j]
                    if p.is_zero():
                        continue
                    if d < 0:
                        problems.append(
                            f"entry ({i}, {j}) must vanish: twist minus "
                            f"degrees is negative"
                        )
                        continue
                    hom, deg = p.is_homogeneous()
                    if not hom or deg != d:
                        problems.append(
                            f"entry ({i}, {j}) is not homogeneous of degree {d}"
                        )
            for k, (w, comps) in enumerate(self.relations):
                for i, c in enumerate(comps):
                    if c.is_zero():
                        continue
                    hom, deg = c.is_homogeneous()
                    want = self.degrees[i] - w
                    if not hom or deg != want:
                        problems.append(
                            f"relation {k} slot {i} is not homogeneous of "
                            f"degree {want}"
                        )
        else:
            if self.chart_entries is not None:
                mats = dict(self.chart_entries)
            else:
                mats = {self.base.chart_id: self.entries}
            for cid, mat in mats.items():
                for i in range(n):
                    for j in range(i, n):
                        if mat[i][j] != mat[j][i]:
                            problems.append(
                                f"chart {cid}: entry ({i}, {j}) is not symmetric"
                            )
        # M r = 0, modulo the chart relation where there is one
        for (chart, mat), (_, cols) in zip(
            self.chart_matrices(), self.chart_relations()
        ):
            gb = _chart_gb(chart)
            for k, (w, comps) in enumerate(cols):
                for i in range(n):
                    acc = mat[i][0] * comps[0]
                    for j in range(1, n):
                        acc = acc + mat[i][j] * comps[j]
                    if not _is_zero_mod(acc, gb):
                        problems.append(
                            f"chart {chart.chart_id}: relation {k} is not "
                            f"annihilated in row {i}"
                        )
        return problems


def _vec_mat_vec(mat, u, v):
    n = len(mat)
    acc = None
    for i in range(n):
        for j in range(n):
            t = u[i] * mat[i][j] * v[j]
            acc = t if acc is None else acc + t
    return acc


def _direction_on_chart(form, v):
    """Restrict a direction's components to chart coordinates when the form
    stores global entries; chart forms take chart-coordinate components."""
    if form.entries is None:
        return lambda chart: v.components
    return lambda chart: tuple(chart.restrict(c) for c in v.components)


def is_isotropic(form, v):
    """Whether v^T M v vanishes on the base (on every chart, modulo its
    relation)."""
    comp = _direction_on_chart(form, v)
    for chart, mat in form.chart_matrices():
        cs = comp(chart)
        gb = _chart_gb(chart)
        if not _is_zero_mod(_vec_mat_vec(mat, cs, cs), gb):
            return False
    return True


def orthogonality_divisor(form, v1, v2):
    """The pairing v1^T M v2.

    For a form with global entries this is one polynomial of degree
    t - w1 - w2 on the ambient space.  For a chart-presented form it is a
    dict of chart polynomials (each reduced modulo the chart relation).
    """
    if form.entries is not None:
        return _vec_mat_vec(form.entries, v1.components, v2.components)
    out = {}
    for chart, mat in form.chart_matrices():
        gb = _chart_gb(chart)
        p = _vec_mat_vec(mat, v1.components, v2.components)
        out[chart.chart_id] = gb.normal_form(p) if gb is not None else p
    return out
