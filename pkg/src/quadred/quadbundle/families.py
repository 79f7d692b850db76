"""Seeded generators for the worked families of graded quadratic forms.

Every family is a deterministic function of (name, seed, field).  The rank-5
extensions share their random draws with the rank-3 families they reduce to,
so the reduction round trips close exactly.
"""

from ..poly import (
    Polynomial,
    RngState,
    monomials_of_degree,
    random_homogeneous,
    kernel_basis,
)
from .base import (
    ProjSpace,
    QuadricInGr24,
    compose_plucker,
    plucker_pfaffian,
)
from .form import GradedQuadraticForm
from .reduce import extend_c4, extend_gm21

__all__ = [
    "FAMILY_NAMES",
    "FAMILY_DIRECTIONS",
    "FAMILY_EXPECTED",
    "generate_family",
]

FAMILY_NAMES = (
    "C4",
    "C4_WITH_PLANE",
    "Y_C4_R62",
    "GM21",
    "GM21_TAU",
    "Y_GM21_K335",
    "GM20_CHART",
    "Y_GM20_K331_CHART",
)

# Demo direction slots for the rank-5 families: the slot whose pairing
# functional has a constant coefficient first, then the deep one.
FAMILY_DIRECTIONS = {
    "Y_C4_R62": (4, 0),
    "Y_GM21_K335": (2, 4),
    "Y_GM20_K331_CHART": (0, 1),
}

# Discriminant degree (in the ambient coordinates that carry the global
# equation) and the generic node count of the discriminant where one is
# established for the family.
FAMILY_EXPECTED = {
    "C4": {"degree": 5, "nodes": 16},
    "C4_WITH_PLANE": {"degree": 5, "nodes": 16},
    "Y_C4_R62": {"degree": 5, "nodes": 16},
    "GM21": {"degree": 4, "nodes": 20},
    "GM21_TAU": {"degree": 4, "nodes": 20},
    "Y_GM21_K335": {"degree": 4, "nodes": 20},
    "GM20_CHART": {"degree": 6, "nodes": 40},
    "Y_GM20_K331_CHART": {"degree": 6, "nodes": 40},
}


def _random_poly(field, nvars, degree, rng):
    if field.is_prime_field:
        return random_homogeneous(field, nvars, degree, rng)
    monoms = monomials_of_degree(nvars, degree)
    while True:
        terms = {}
        for m in monoms:
            c = rng.next_mod(21) - 10
            if c:
                terms[m] = field.coerce(c)
        if terms:
            return Polynomial(field, nvars, terms)


def _scalar(field, rng):
    if field.is_prime_field:
        return rng.next_mod(field.p)
    return field.coerce(rng.next_mod(21) - 10)


def generate_family(name, seed, field):
    if name not in FAMILY_NAMES:
        raise ValueError(f"unknown family {name!r}")
    rng = RngState(seed)
    return _BUILDERS[name](field, rng)


# -- conic bundles over P^3 ---------------------------------------------------


def _c4_shared(field, rng):
    q0 = _random_poly(field, 4, 2, rng.derive(1))
    q1 = _random_poly(field, 4, 2, rng.derive(2))
    q2 = _random_poly(field, 4, 2, rng.derive(3))
    l1 = _random_poly(field, 4, 1, rng.derive(4))
    l2 = _random_poly(field, 4, 1, rng.derive(5))
    l3 = _random_poly(field, 4, 1, rng.derive(6))
    return q0, q1, q2, l1, l2, l3


def _c4_matrix(field, corner, q1, q2, l1, l2, l3):
    base = ProjSpace(3, field)
    return GradedQuadraticForm(
        base,
        (-1, 0, 0),
        1,
        entries=[[corner, q1, q2], [q1, l1, l2], [q2, l2, l3]],
        field=field,
    )


def _build_c4(field, rng):
    _, q1, q2, l1, l2, l3 = _c4_shared(field, rng)
    corner = _random_poly(field, 4, 3, rng.derive(7))
    return _c4_matrix(field, corner, q1, q2, l1, l2, l3)


def _build_c4_with_plane(field, rng):
    q0, q1, q2, l1, l2, l3 = _c4_shared(field, rng)
    x3 = Polynomial.variable(field, 4, 3)
    return _c4_matrix(field, x3 * q0, q1, q2, l1, l2, l3)


def _build_y_c4_r62(field, rng):
    return extend_c4(*_c4_shared(field, rng))


# -- quadric surface bundles over a quadric threefold -------------------------


def _gm21_hyperplane(field, rng):
    r = rng.derive(1)
    while True:
        ell = tuple(_scalar(field, r) for _ in range(6))
        if plucker_pfaffian(ell, field) != 0:
            return ell


def _plucker_linear(coeffs, pluckers, field):
    out = Polynomial.zero(field, 4)
    for c, q in zip(coeffs, pluckers):
        out = out + q * c
    return out


def _gm21_shared(field, rng):
    """Hyperplane, per-chart U-block and pairing column, and the two
    hyperplane classes of the tau corner."""
    ell = _gm21_hyperplane(field, rng)
    base = QuadricInGr24(ell, field)
    r_phi = rng.derive(2)
    bil = [[None] * 4 for _ in range(4)]
    for k in range(4):
        for m in range(k, 4):
            bil[k][m] = bil[m][k] = _scalar(field, r_phi)
    r_a = rng.derive(3)
    pair_c = [[_scalar(field, r_a) for _ in range(6)] for _ in range(4)]
    phi = {}
    a = {}
    for chart in base.charts():
        u1, u2 = chart.rows()
        ps = chart.plucker()
        us = (u1, u2)
        block = [[None, None], [None, None]]
        for s in range(2):
            for t in range(s, 2):
                acc = Polynomial.zero(field, 4)
                for k in range(4):
                    for m in range(4):
                        acc = acc + us[s][k] * us[t][m] * bil[k][m]
                block[s][t] = block[t][s] = acc
        col = []
        for s in range(2):
            acc = Polynomial.zero(field, 4)
            for k in range(4):
                for m in range(6):
                    acc = acc + us[s][k] * ps[m] * pair_c[k][m]
            col.append(acc)
        phi[chart.chart_id] = block
        a[chart.chart_id] = col
    return base, phi, a


def _gm21_corner_random(field, rng):
    r = rng.derive(4)
    terms = {}
    for m in monomials_of_degree(6, 2):
        c = _scalar(field, r)
        if c:
            terms[m] = c
    return terms


def _gm21_tau_lines(field, rng):
    r = rng.derive(4)
    lin1 = tuple(_scalar(field, r) for _ in range(6))
    lin2 = tuple(_scalar(field, r) for _ in range(6))
    return lin1, lin2


def _gm21_matrix(base, phi, a, corner_by_chart):
    chart_entries = {}
    for chart in base.charts():
        cid = chart.chart_id
        f = phi[cid]
        av = a[cid]
        chart_entries[cid] = [
            [f[0][0], f[0][1], av[0]],
            [f[0][1], f[1][1], av[1]],
            [av[0], av[1], corner_by_chart[cid]],
        ]
    return GradedQuadraticForm(
        base, (0, 0, -1), 0, chart_entries=chart_entries, field=base.field,
    )


def _build_gm21(field, rng):
    base, phi, a = _gm21_shared(field, rng)
    corner_terms = _gm21_corner_random(field, rng)
    corner = {
        c.chart_id: compose_plucker(corner_terms, c) for c in base.charts()
    }
    return _gm21_matrix(base, phi, a, corner)


def _build_gm21_tau(field, rng):
    # corner -2*l1*l2, matching what reduction of the rank-5 extension
    # produces on the nose
    base, phi, a = _gm21_shared(field, rng)
    lin1, lin2 = _gm21_tau_lines(field, rng)
    corner = {}
    for chart in base.charts():
        ps = chart.plucker()
        p1 = _plucker_linear(lin1, ps, field)
        p2 = _plucker_linear(lin2, ps, field)
        corner[chart.chart_id] = p1 * p2 * field.coerce(-2)
    return _gm21_matrix(base, phi, a, corner)


def _build_y_gm21_k335(field, rng):
    base, phi, a = _gm21_shared(field, rng)
    lin1, lin2 = _gm21_tau_lines(field, rng)
    return extend_gm21(base, phi, a, lin1, lin2)


# -- presented rank-5 bundles over P^3 ----------------------------------------

_GM20_CACHE = {}


def _gm20_layout(drop_top_square):
    """Unknown coefficient slots (i, j, monomial) for the symmetric 6x6
    matrix with degrees (0, -1, -1, -1, -1, -1) and twist 0.

    The (0, 0) slot is always omitted (the trivial summand is isotropic);
    `drop_top_square` omits the (1, 1) quadric as well.
    """
    layout = []
    for i in range(6):
        for j in range(i, 6):
            if (i, j) == (0, 0):
                continue
            if drop_top_square and (i, j) == (1, 1):
                continue
            deg = 0 - _GM20_DEGREES[i] - _GM20_DEGREES[j]
            for m in monomials_of_degree(4, deg):
                layout.append((i, j, m))
    return layout


_GM20_DEGREES = (0, -1, -1, -1, -1, -1)


def _gm20_kernel(field, drop_top_square):
    """Basis of coefficient vectors whose matrix annihilates the Euler
    presentation column (0, 0, x0, x1, x2, x3)."""
    key = (field.p, drop_top_square)
    if key in _GM20_CACHE:
        return _GM20_CACHE[key]
    layout = _gm20_layout(drop_top_square)
    mon2 = {m: k for k, m in enumerate(monomials_of_degree(4, 2))}
    mon3 = {m: k for k, m in enumerate(monomials_of_degree(4, 3))}
    # rows: descent row 0 has quadric coefficients, rows 1..5 cubics
    nrows = len(mon2) + 5 * len(mon3)
    rows = [[field.zero()] * len(layout) for _ in range(nrows)]
    one = field.one()

    def row_index(i, monom):
        if i == 0:
            return mon2[monom]
        return len(mon2) + (i - 1) * len(mon3) + mon3[monom]

    def bump(i, var, monom, col):
        shifted = list(monom)
        shifted[var] += 1
        rows[row_index(i, tuple(shifted))][col] = one

    for col, (i, j, m) in enumerate(layout):
        if j >= 2:
            bump(i, j - 2, m, col)
        if i != j and i >= 2:
            bump(j, i - 2, m, col)
    basis = kernel_basis(rows, len(layout), p=field.p)
    _GM20_CACHE[key] = (layout, basis)
    return _GM20_CACHE[key]


def _gm20_form(field, rng, drop_top_square):
    layout, basis = _gm20_kernel(field, drop_top_square)
    if not basis:
        raise ValueError("presentation kernel is trivial")
    coeffs = [field.zero()] * len(layout)
    # one fresh draw per basis vector, in a fixed order
    draws = rng.derive(1)
    for vec in basis:
        c = _scalar(field, draws)
        if c == 0:
            continue
        for k, val in enumerate(vec):
            if val:
                acc = coeffs[k] + c * val
                coeffs[k] = acc % field.p if field.p is not None else acc
    terms = {}
    for (i, j, m), c in zip(layout, coeffs):
        if c:
            terms.setdefault((i, j), {})[m] = c
    zero = Polynomial.zero(field, 4)
    entries = [[zero] * 6 for _ in range(6)]
    for i in range(6):
        for j in range(i, 6):
            tm = terms.get((i, j))
            p = Polynomial(field, 4, dict(tm)) if tm else zero
            entries[i][j] = entries[j][i] = p
    x = [Polynomial.variable(field, 4, k) for k in range(4)]
    relation = (-2, (zero, zero, x[0], x[1], x[2], x[3]))
    return GradedQuadraticForm(
        ProjSpace(3, field),
        _GM20_DEGREES,
        0,
        entries=entries,
        relations=[relation],
        field=field,
    )


def _build_gm20_chart(field, rng):
    return _gm20_form(field, rng, drop_top_square=False)


def _build_y_gm20_k331_chart(field, rng):
    return _gm20_form(field, rng, drop_top_square=True)


_BUILDERS = {
    "C4": _build_c4,
    "C4_WITH_PLANE": _build_c4_with_plane,
    "Y_C4_R62": _build_y_c4_r62,
    "GM21": _build_gm21,
    "GM21_TAU": _build_gm21_tau,
    "Y_GM21_K335": _build_y_gm21_k335,
    "GM20_CHART": _build_gm20_chart,
    "Y_GM20_K331_CHART": _build_y_gm20_k331_chart,
}
