"""Discriminant routes: split, presented, and chart-fitted."""

import pytest

from quadred.poly import (QQ, Polynomial, determinant, prime_field,
                          squarefree_part)
from quadred.quadbundle import (GradedQuadraticForm, ProjSpace, discriminant,
                                generate_family)

F = prime_field(10007)


def _prop(f, g):
    if set(f.terms) != set(g.terms):
        return False
    k = next(iter(f.terms))
    lam = f.field.coerce(f.terms[k]) * f.field.inv(g.terms[k])
    if f.field.p is not None:
        lam %= f.field.p
    return f == g * lam


def test_split_route_c4():
    form = generate_family("C4", 1, F)
    rep = discriminant(form)
    assert rep.degree == 5
    assert rep.compatible is True
    assert rep.global_equation == determinant([list(r) for r in form.entries])
    assert sorted(rep.chart_equations) == ["0", "1", "2", "3"]
    for chart in form.base.charts():
        eq = rep.chart_equations[chart.chart_id]
        assert eq == chart.restrict(rep.global_equation)
        assert _prop(rep.chart_squarefree[chart.chart_id], squarefree_part(eq))


def test_split_route_degree_note():
    # a determinant degree that undershoots the graded degree is reported,
    # not fatal; only entries that dodge the degree table can trigger it
    zero = Polynomial.zero(F, 4)
    one = Polynomial.constant(F, 4, 1)
    x0 = Polynomial.variable(F, 4, 0)
    form = GradedQuadraticForm(
        ProjSpace(3, F), (0, 0), 1,
        entries=[[x0, one], [one, zero]], field=F,
    )
    rep = discriminant(form)
    assert rep.degree == 0
    assert rep.notes


def test_split_route_rejects_zero_determinant():
    zero = Polynomial.zero(F, 4)
    x0 = Polynomial.variable(F, 4, 0)
    form = GradedQuadraticForm(
        ProjSpace(3, F), (0, 0), 1,
        entries=[[x0, x0], [x0, x0]], field=F,
    )
    with pytest.raises(ValueError):
        discriminant(form)


def test_presented_route_gm20():
    form = generate_family("GM20_CHART", 1, F)
    rep = discriminant(form)
    assert rep.degree == 6
    assert rep.compatible is True
    assert rep.global_equation is not None
    hom, deg = rep.global_equation.is_homogeneous()
    assert hom and deg == 6
    # each chart equation is the dehomogenization of the common sextic
    for chart in form.base.charts():
        eq = rep.chart_equations[chart.chart_id]
        assert eq == chart.restrict(rep.global_equation)


def test_presented_route_variant():
    form = generate_family("Y_GM20_K331_CHART", 2, F)
    rep = discriminant(form)
    assert rep.degree == 6
    assert rep.compatible is True


def test_chart_route_gm21_fits_and_certifies():
    form = generate_family("GM21", 1, F)
    rep = discriminant(form)
    assert rep.degree == 4
    assert rep.compatible is True
    assert rep.global_equation is not None
    assert rep.global_equation.nvars == 6
    assert rep.ambient_quadric is not None
    # the section pair lives in five variables after the hyperplane is solved
    f, g = rep.section_equations
    assert f.nvars == 5 and g.nvars == 5
    assert not f.is_zero() and not g.is_zero()


def test_chart_route_gm21_over_q_has_no_fit():
    form = generate_family("GM21", 1, QQ)
    rep = discriminant(form)
    assert rep.global_equation is None
    assert rep.compatible is None
    assert any("prime field" in n for n in rep.notes)
    assert len(rep.chart_equations) == 6


def test_single_chart_fallback():
    form = generate_family("GM21", 1, F)
    cid, entries = sorted(form.chart_entries.items())[0]
    chart = [c for c in form.base.charts() if c.chart_id == cid][0]
    single = GradedQuadraticForm(chart, form.degrees, form.twist,
                                 entries=entries, field=F)
    rep = discriminant(single)
    assert rep.global_equation is None
    assert list(rep.chart_equations) == [cid]
    assert any("single-chart" in n for n in rep.notes)


def test_fitted_quartic_restricts_to_every_chart():
    from quadred.poly import groebner
    from quadred.quadbundle import compose_plucker
    form = generate_family("GM21", 2, F)
    rep = discriminant(form)
    for chart in form.base.charts():
        gb = groebner(list(chart.relations))
        restricted = gb.normal_form(
            compose_plucker(rep.global_equation.terms, chart))
        eq = gb.normal_form(rep.chart_equations[chart.chart_id])
        assert _prop(restricted, eq) or (restricted.is_zero() and eq.is_zero())
