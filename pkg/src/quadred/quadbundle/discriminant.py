"""Discriminants of graded quadratic forms.

Three routes, by the shape of the form:

* global entries, no presentation: the determinant of the Gram matrix is the
  global equation, and every chart equation is its dehomogenization;
* global entries with presentation columns: per chart the columns are
  eliminated by their unit entries and the complement determinant is taken;
  the chart equations all rehomogenize to one global equation because the
  frame determinants of the eliminations are coordinates, which square away;
* chart entries over a quadric threefold: chart determinants are reduced
  modulo the chart relation, and (over a prime field) a global equation in
  the six Plucker coordinates is fitted on sampled points of one chart and
  then certified against every chart.
"""

from ..poly import (
    Polynomial,
    RngState,
    determinant,
    groebner,
    monomials_of_degree,
    solve_linear,
    squarefree_part,
)
from .base import compose_plucker
from .form import GradedQuadraticForm
from .reduce import ChartFrameError, _eliminate_relations

__all__ = ["DiscriminantReport", "discriminant"]

_FIT_SEED = 0x5EED5


class DiscriminantReport:
    """What the discriminant computation established.

    `degree` is the degree of `global_equation` when one exists, else the
    largest chart-equation degree (affine chart coordinates, which is why an
    unfitted quadric-threefold run reports roughly twice the ambient degree).
    `compatible` records whether all chart equations glue to the global one;
    it stays None when no global equation was produced.
    """

    __slots__ = (
        "degree",
        "global_equation",
        "ambient_quadric",
        "section_equations",
        "chart_equations",
        "chart_squarefree",
        "compatible",
        "notes",
        "field",
    )

    def __init__(self, degree, global_equation, ambient_quadric,
                 section_equations, chart_equations, chart_squarefree,
                 compatible, notes, field):
        self.degree = degree
        self.global_equation = global_equation
        self.ambient_quadric = ambient_quadric
        self.section_equations = section_equations
        self.chart_equations = chart_equations
        self.chart_squarefree = chart_squarefree
        self.compatible = compatible
        self.notes = notes
        self.field = field


def _rehomogenize(chart_poly, insert_index, degree, field):
    """Inverse of dehomogenizing at x_insert_index, padding each monomial up
    to the target degree."""
    nv = chart_poly.nvars + 1
    terms = {}
    for m, c in chart_poly.terms.items():
        d = sum(m)
        if d > degree:
            raise ValueError("chart equation exceeds the target degree")
        full = m[:insert_index] + (degree - d,) + m[insert_index:]
        terms[full] = c
    return Polynomial(field, nv, terms)


def discriminant(form, rng=None):
    """Discriminant data of a graded quadratic form.

    Raises ValueError when the determinant vanishes identically or (for a
    presented form) when some chart admits no frame.
    """
    if rng is None:
        rng = RngState(_FIT_SEED)
    if form.entries is not None and not form.base.is_chart:
        if form.relations:
            return _presented_global(form)
        return _split_global(form)
    if form.chart_entries is not None:
        return _chart_presented(form, rng)
    # a single-chart form: one chart equation, nothing global
    eq = determinant(form.entries)
    rels = getattr(form.base, "relations", ())
    if rels:
        eq = groebner(list(rels)).normal_form(eq)
    if eq.is_zero():
        raise ValueError("discriminant vanishes identically")
    return DiscriminantReport(
        eq.total_degree(), None, None, None,
        {form.base.chart_id: eq}, {form.base.chart_id: squarefree_part(eq)},
        None, ["single-chart form: no global equation"], form.field,
    )


def _split_global(form):
    field = form.field
    eq = determinant(form.entries)
    if eq.is_zero():
        raise ValueError("discriminant vanishes identically")
    hom, deg = eq.is_homogeneous()
    if not hom:
        raise ValueError("determinant is not homogeneous")
    want = form.size * form.twist - 2 * sum(form.degrees)
    notes = []
    if deg != want:
        notes.append(
            f"determinant degree {deg} differs from the graded degree {want}"
        )
    chart_eqs = {}
    chart_sqf = {}
    compatible = True
    for chart in form.base.charts():
        ce = chart.restrict(eq)
        chart_eqs[chart.chart_id] = ce
        chart_sqf[chart.chart_id] = squarefree_part(ce)
        if _rehomogenize(ce, chart.index, deg, field) != eq:
            compatible = False
    return DiscriminantReport(
        deg, eq, None, None, chart_eqs, chart_sqf, compatible, notes, field,
    )


def _presented_global(form):
    field = form.field
    chart_eqs = {}
    chart_sqf = {}
    zero_vec = tuple(
        Polynomial.zero(field, form.base.nvars - 1) for _ in range(form.size)
    )
    for (chart, mat), (_, cols) in zip(form.chart_matrices(),
                                       form.chart_relations()):
        try:
            mat_c, _, _ = _eliminate_relations(mat, cols, zero_vec, None, field)
        except ChartFrameError as e:
            raise ValueError(
                f"no valid frame on chart {chart.chart_id}: {e}"
            ) from e
        eq = determinant(mat_c)
        if eq.is_zero():
            raise ValueError("discriminant vanishes identically")
        chart_eqs[chart.chart_id] = eq
        chart_sqf[chart.chart_id] = squarefree_part(eq)
    deg = max(eq.total_degree() for eq in chart_eqs.values())
    homs = {}
    for chart in form.base.charts():
        homs[chart.chart_id] = _rehomogenize(
            chart_eqs[chart.chart_id], chart.index, deg, field
        )
    first = next(iter(homs.values()))
    compatible = all(h == first for h in homs.values())
    return DiscriminantReport(
        deg, first if compatible else None, None, None,
        chart_eqs, chart_sqf, compatible, [], field,
    )


def _chart_presented(form, rng):
    field = form.field
    base = form.base
    notes = []
    chart_eqs = {}
    gbs = {}
    for chart, mat in form.chart_matrices():
        gb = groebner(list(chart.relations)) if chart.relations else None
        gbs[chart.chart_id] = gb
        eq = determinant(mat)
        if gb is not None:
            eq = gb.normal_form(eq)
        chart_eqs[chart.chart_id] = eq
    if all(eq.is_zero() for eq in chart_eqs.values()):
        raise ValueError("discriminant vanishes identically")
    if not field.is_prime_field:
        notes.append("global equation is only fitted over a prime field")
        deg = max(eq.total_degree() for eq in chart_eqs.values())
        return DiscriminantReport(
            deg, None, None, None, chart_eqs, {}, None, notes, field,
        )
    fitted, deg = _fit_plucker(form, chart_eqs, gbs, rng)
    compatible = _certify(form, fitted, chart_eqs, gbs, notes)
    quadric = base.plucker_quadric()
    sections = _eliminate_hyperplane(fitted, quadric, base.ell, field)
    return DiscriminantReport(
        deg, fitted, quadric, sections, chart_eqs, {}, compatible, notes,
        field,
    )


def _sample_on_chart(chart, gb, rng, field):
    """A random point of the chart with the chart relation solved for the
    last coordinate (resampling when it is not solvable there)."""
    rel = chart.relations[0] if chart.relations else None
    p = field.p
    while True:
        y = [rng.next_mod(p) for _ in range(3)]
        if rel is None:
            return tuple(y + [rng.next_mod(p)])
        partial = rel.substitute({0: y[0], 1: y[1], 2: y[2]})
        # linear in the last coordinate
        lin = partial.terms.get((0, 0, 0, 1), 0)
        const = partial.terms.get((0, 0, 0, 0), 0)
        if lin == 0:
            continue
        y4 = -const * pow(lin, p - 2, p) % p
        return tuple(y + [y4])


def _fit_plucker(form, chart_eqs, gbs, rng):
    """Fit a polynomial in the Plucker coordinates matching one chart's
    determinant on sampled points of the chart."""
    field = form.field
    p = field.p
    fit_id = None
    for chart in form.base.charts():
        if not chart_eqs[chart.chart_id].is_zero():
            fit_chart = chart
            fit_id = chart.chart_id
            break
    det_c = chart_eqs[fit_id]
    d0 = max(1, -(-det_c.total_degree() // 2))
    pluckers = fit_chart.plucker()
    gb = gbs[fit_id]
    for deg in range(d0, d0 + 3):
        monoms = monomials_of_degree(6, deg)
        nsamples = len(monoms) + 40
        rows = []
        rhs = []
        for _ in range(nsamples):
            pt = _sample_on_chart(fit_chart, gb, rng, field)
            pv = [q.evaluate(pt) for q in pluckers]
            row = []
            for m in monoms:
                val = 1
                for k, e in enumerate(m):
                    if e:
                        val = val * pow(pv[k], e, p) % p
                row.append(val)
            rows.append(row)
            rhs.append(det_c.evaluate(pt))
        sol = solve_linear(rows, rhs, p)
        if sol is None:
            continue
        terms = {m: c for m, c in zip(monoms, sol) if c}
        fitted = Polynomial(field, 6, terms)
        if not fitted.is_zero():
            return fitted, deg
    raise ValueError("no global equation of moderate degree matches the charts")


def _leading_ratio(a, b):
    """Scalar lambda with a = lambda * b on leading terms, or None."""
    if a.is_zero() or b.is_zero():
        return None
    ma, ca = next(iter(a.terms.items()))
    mb, cb = next(iter(b.terms.items()))
    if ma != mb:
        return None
    field = a.field
    return field.coerce(ca * field.inv(cb)) if field.p is not None else ca / cb


def _certify(form, fitted, chart_eqs, gbs, notes):
    """Check the fitted equation restricts to a scalar multiple of every
    chart determinant modulo the chart relation."""
    ok = True
    for chart in form.base.charts():
        cid = chart.chart_id
        gb = gbs[cid]
        restricted = compose_plucker(fitted.terms, chart)
        if gb is not None:
            restricted = gb.normal_form(restricted)
        det_c = chart_eqs[cid]
        if det_c.is_zero():
            if not restricted.is_zero():
                ok = False
                notes.append(f"chart {cid}: fitted equation does not vanish")
            continue
        lam = _leading_ratio(restricted, det_c)
        if lam is None:
            ok = False
            notes.append(f"chart {cid}: fitted equation does not match")
            continue
        diff = restricted - det_c * lam
        if gb is not None:
            diff = gb.normal_form(diff)
        if not diff.is_zero():
            ok = False
            notes.append(f"chart {cid}: fitted equation does not match")
    return ok


def _eliminate_hyperplane(fitted, quadric, ell, field):
    """Substitute the hyperplane solution into the fitted equation and the
    Plucker quadric, producing two equations in five coordinates."""
    pivot = None
    for k, c in enumerate(ell):
        if c != 0:
            pivot = k
            break
    inv = field.inv(ell[pivot])
    repl = Polynomial.zero(field, 6)
    for k, c in enumerate(ell):
        if k == pivot or c == 0:
            continue
        repl = repl - Polynomial.variable(field, 6, k) * (c * inv)
    f = fitted.substitute({pivot: repl}).drop_var(pivot)
    g = quadric.substitute({pivot: repl}).drop_var(pivot)
    if f.is_zero() or g.is_zero():
        raise ValueError("hyperplane restriction degenerates")
    return (f, g)
