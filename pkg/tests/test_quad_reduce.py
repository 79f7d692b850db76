"""Hyperbolic reduction: exact round trips, determinant bookkeeping, and the
presented quotient.

The rank-5 families are built from the same draws as their rank-3 partners,
so reduction along the distinguished slot must reproduce the partner exactly,
entry by entry, with no normal forms involved.
"""

import pytest

from quadred.poly import (QQ, Polynomial, RngState, determinant, divide_exact,
                          groebner, prime_field, squarefree_part)
from quadred.quadbundle import (ChartFrameError, IsotropicDirection,
                                extend_c4, extend_gm21, generate_family,
                                reduce_form)
from quadred.quadbundle.families import _c4_shared
from quadred.quadbundle.reduce import _eliminate_relations

F = prime_field(10007)

SEEDS = (1, 2, 3, 4, 5)


def _prop_scalar(f, g):
    """The scalar lam with f == lam * g, or None."""
    if set(f.terms) != set(g.terms):
        return None
    k = next(iter(f.terms))
    lam = f.field.coerce(f.terms[k]) * f.field.inv(g.terms[k])
    if f.field.p is not None:
        lam %= f.field.p
    return lam if f == g * lam else None


@pytest.mark.parametrize("seed", SEEDS)
def test_c4_round_trip_is_exact(seed):
    y5 = generate_family("Y_C4_R62", seed, F)
    partner = generate_family("C4_WITH_PLANE", seed, F)
    red = reduce_form(y5, IsotropicDirection.coordinate(y5, 4))
    assert red.form is not None
    assert red.form.entries == partner.entries
    assert red.form.degrees == partner.degrees
    assert red.form.twist == partner.twist


@pytest.mark.parametrize("seed", SEEDS)
def test_c4_determinants_differ_by_sign(seed):
    y5 = generate_family("Y_C4_R62", seed, F)
    partner = generate_family("C4_WITH_PLANE", seed, F)
    det5 = determinant([list(r) for r in y5.entries])
    det3 = determinant([list(r) for r in partner.entries])
    assert det5 == det3 * F.coerce(-1)


@pytest.mark.parametrize("seed", SEEDS)
def test_gm21_round_trip_is_exact(seed):
    y5 = generate_family("Y_GM21_K335", seed, F)
    partner = generate_family("GM21_TAU", seed, F)
    red = reduce_form(y5, IsotropicDirection.coordinate(y5, 2))
    assert red.failures == {}
    assert red.form is not None
    assert red.form.chart_entries == partner.chart_entries


@pytest.mark.parametrize("seed", (1, 2))
def test_c4_deep_direction_charts(seed):
    # reducing along the degree -1 slot has no constant pivot except on the
    # chart where the linear functional becomes a unit
    y5 = generate_family("Y_C4_R62", seed, F)
    det5 = determinant([list(r) for r in y5.entries])
    red = reduce_form(y5, IsotropicDirection.coordinate(y5, 0))
    assert red.form is None
    assert set(red.charts) == {"0", "1", "2", "3"}
    for chart in y5.base.charts():
        cr = red.charts[chart.chart_id]
        g3 = determinant([list(r) for r in cr.gram])
        if cr.cleared:
            stripped = divide_exact(g3, cr.pivot ** 4)
        else:
            stripped = g3
        want = squarefree_part(chart.restrict(det5))
        assert _prop_scalar(squarefree_part(stripped), want) is not None
    # the chart where x3 is scaled to 1 descends with a constant pivot
    assert red.charts["3"].cleared is False
    assert red.charts["0"].cleared is True


@pytest.mark.parametrize("seed", (1, 2))
def test_gm21_deep_direction_det_identity(seed):
    # cleared frame: det(P) = -pivot^4 det(M) modulo the chart relation
    y5 = generate_family("Y_GM21_K335", seed, F)
    red = reduce_form(y5, IsotropicDirection.coordinate(y5, 4))
    for chart in y5.base.charts():
        cr = red.charts[chart.chart_id]
        assert cr.cleared
        det5 = determinant([list(r) for r in y5.chart_entries[chart.chart_id]])
        gb = groebner(list(chart.relations))
        lhs = gb.normal_form(determinant([list(r) for r in cr.gram]))
        rhs = gb.normal_form(cr.pivot ** 4 * det5)
        assert lhs == rhs * F.coerce(-1)


def test_quotient_presentation_annihilates():
    y5 = generate_family("Y_C4_R62", 1, F)
    red = reduce_form(y5, IsotropicDirection.coordinate(y5, 0))
    q = red.quotient_form
    assert q is not None
    assert q.size == 6
    assert len(q.relations) == 4
    assert q.validate() == []


@pytest.mark.parametrize("field", (F, QQ))
def test_quotient_chart_determinant_factors(field):
    # where a frame exists the presented quotient's determinant is the
    # ambient discriminant times a unit
    if field is F:
        y5 = generate_family("Y_C4_R62", 1, field)
    else:
        y5 = extend_c4(*_c4_shared(QQ, RngState(1)))
    red = reduce_form(y5, IsotropicDirection.coordinate(y5, 0))
    q = red.quotient_form
    det5 = determinant([list(r) for r in y5.entries])
    framed = 0
    for chart, mat in q.chart_matrices():
        cols = [c for ch, c in q.chart_relations()
                if ch.chart_id == chart.chart_id][0]
        zero = Polynomial.zero(field, mat[0][0].nvars)
        try:
            mat_c, _, kept = _eliminate_relations(
                mat, cols, tuple(zero for _ in range(q.size)), None, field)
        except ChartFrameError:
            continue
        framed += 1
        assert len(mat_c) == 3
        ratio = divide_exact(determinant([list(r) for r in mat_c]),
                             chart.restrict(det5))
        assert ratio.total_degree() == 0
    assert framed == 1


def test_reject_non_isotropic_direction():
    y5 = generate_family("Y_C4_R62", 1, F)
    with pytest.raises(ValueError):
        reduce_form(y5, IsotropicDirection.coordinate(y5, 1))


def test_reject_direction_of_wrong_length():
    y5 = generate_family("Y_C4_R62", 1, F)
    one = Polynomial.constant(F, 4, 1)
    with pytest.raises(ValueError):
        reduce_form(y5, IsotropicDirection(0, (one,)))


def test_reject_direction_without_unit():
    y5 = generate_family("Y_C4_R62", 1, F)
    x0 = Polynomial.variable(F, 4, 0)
    zero = Polynomial.zero(F, 4)
    with pytest.raises(ValueError):
        reduce_form(y5, IsotropicDirection(0, (x0, zero, zero, zero, zero)))


def test_extend_c4_checks_degrees():
    x = [Polynomial.variable(F, 4, k) for k in range(4)]
    quads = [x[0] * x[1], x[1] * x[2], x[2] * x[3]]
    lins = [x[0], x[1], x[2]]
    extend_c4(*quads, *lins)
    with pytest.raises(ValueError):
        extend_c4(lins[0], quads[1], quads[2], *lins)
    with pytest.raises(ValueError):
        extend_c4(*quads, quads[0], lins[1], lins[2])


def test_extend_gm21_matches_family():
    from quadred.quadbundle.families import _gm21_shared, _gm21_tau_lines
    rng = RngState(7)
    base, phi, a = _gm21_shared(F, rng)
    lin1, lin2 = _gm21_tau_lines(F, rng)
    built = extend_gm21(base, phi, a, lin1, lin2)
    named = generate_family("Y_GM21_K335", 7, F)
    assert built.chart_entries == named.chart_entries


def test_avoid_slot_moves_the_pivot():
    # two constant pivot candidates; avoiding one selects the other
    from quadred.quadbundle import GradedQuadraticForm, ProjSpace
    zero = Polynomial.zero(F, 4)
    one = Polynomial.constant(F, 4, 1)
    a = Polynomial.variable(F, 4, 0)
    entries = [
        [zero, one, one, zero],
        [one, zero, zero, a],
        [one, zero, zero, a],
        [zero, a, a, zero],
    ]
    form = GradedQuadraticForm(ProjSpace(3, F), (0, 0, 0, -1), 0,
                               entries=entries, field=F)
    assert form.validate() == []
    v = IsotropicDirection.coordinate(form, 0)
    default = reduce_form(form, v)
    assert default.pivot_slot == 1
    adjusted = reduce_form(form, v, avoid_slot=1)
    assert adjusted.pivot_slot == 2
