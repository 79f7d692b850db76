"""Gr(2,4) charts, Plucker coordinates, and the pencil-smoothness pfaffian."""

import pytest

from quadred.poly import QQ, Polynomial, prime_field
from quadred.quadbundle import (GR24_PAIRS, ProjSpace, QuadricInGr24,
                                compose_plucker, plucker_pfaffian)

F = prime_field(10007)


def test_pfaffian_of_unit_vectors():
    # the six coordinate hyperplanes pair up: 05, 14, 23
    for i in range(6):
        ell = [0] * 6
        ell[i] = 1
        assert plucker_pfaffian(ell, QQ) == 0
    assert plucker_pfaffian([1, 0, 0, 0, 0, 1], QQ) == 1
    assert plucker_pfaffian([0, 1, 0, 0, 1, 0], QQ) == -1
    assert plucker_pfaffian([0, 0, 1, 1, 0, 0], QQ) == 1


def test_pfaffian_mod_p():
    assert plucker_pfaffian([2, 3, 5, 7, 11, 13], F) == (2 * 13 - 3 * 11 + 5 * 7) % 10007


def test_smooth_hyperplane_accepts():
    q = QuadricInGr24((1, 0, 0, 0, 0, 1), F)
    assert len(q.charts()) == 6
    assert [c.pair for c in q.charts()] == list(GR24_PAIRS)


def test_degenerate_hyperplane_rejects():
    with pytest.raises(ValueError):
        QuadricInGr24((1, 0, 0, 0, 0, 0), F)
    with pytest.raises(ValueError):
        QuadricInGr24((1, 2, 3), F)


def test_chart_coordinates_satisfy_plucker_quadric():
    # p01*p23 - p02*p13 + p03*p12 vanishes identically on every chart
    q = QuadricInGr24((3, 1, 4, 1, 5, 9), F)
    for chart in q.charts():
        p = chart.plucker()
        rel = p[0] * p[5] - p[1] * p[4] + p[2] * p[3]
        assert rel.is_zero()


def test_chart_relation_is_linear_in_last_coordinate():
    # on the (0,1) chart the hyperplane section solves for y4 generically
    q = QuadricInGr24((3, 1, 4, 1, 5, 9), F)
    chart = q.charts()[0]
    assert chart.pair == (0, 1)
    g = chart.chart_relation()
    assert max(m[3] for m in g.terms) == 1


def test_chart_pair_coordinates_are_normalized():
    # the chart's own Plucker coordinate is 1 and the others match the minors
    q = QuadricInGr24((1, 0, 0, 0, 0, 1), F)
    for chart in q.charts():
        p = chart.plucker()
        idx = GR24_PAIRS.index(chart.pair)
        assert p[idx].is_constant() and p[idx].constant_value() == 1


def test_compose_plucker_matches_direct_substitution():
    q = QuadricInGr24((1, 2, 0, 0, 3, 4), F)
    chart = q.charts()[2]
    terms = {(2, 0, 0, 0, 0, 0): 5, (0, 0, 1, 0, 1, 0): 3}
    composed = compose_plucker(terms, chart)
    p = chart.plucker()
    direct = p[0] * p[0] * 5 + p[2] * p[4] * 3
    assert composed == direct


def test_proj_space_charts():
    base = ProjSpace(3, F)
    assert base.names == ("x0", "x1", "x2", "x3")
    charts = base.charts()
    assert [c.chart_id for c in charts] == ["0", "1", "2", "3"]
    x = [Polynomial.variable(F, 4, k) for k in range(4)]
    f = x[0] * x[2] - x[1] * x[1]
    r = charts[0].restrict(f)
    assert r.nvars == 3
    # x0 = 1 leaves x2 - x1^2 in (x1, x2, x3)
    assert r.terms == {(0, 1, 0): 1, (2, 0, 0): 10006}


def test_proj_space_rejects_points():
    with pytest.raises(ValueError):
        ProjSpace(0, F)
