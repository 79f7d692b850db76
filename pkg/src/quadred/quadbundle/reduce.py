"""Hyperbolic reduction of a graded quadratic form along an isotropic
direction, and the inverse extension constructions.

Reducing along v quotients v-perp by v.  When the pairing functional
phi = v^T M has a constant unit coefficient the quotient is again a sum of
line bundles and the reduced Gram matrix is computed globally by exact
elimination.  Otherwise the quotient is only locally free in a weaker sense:
per chart we pick the lowest-degree nonzero coefficient of phi as a local
pivot pi and return the denominator-cleared Gram of the frame
f_i = pi e_i - phi_i e_pivot, so that

    det(cleared gram) = +/- pi^(2n-6) * det(M) on the chart

for an n x n input (after any presentation columns are eliminated).  For a
global split input we also return a presented avatar of the quotient: the
form pulled back along Lambda^2 W(-(t-w)) ->> ker(phi), with its Koszul
relation columns.
"""

from fractions import Fraction
from itertools import combinations

from ..poly import Polynomial, groebner
from .base import ProjSpace
from .form import GradedQuadraticForm, is_isotropic

__all__ = [
    "ChartFrameError",
    "ChartReduction",
    "ReductionResult",
    "reduce_form",
    "extend_c4",
    "extend_gm21",
]


class ChartFrameError(ValueError):
    """No usable frame on a chart: a presentation column has no unit entry,
    or the pairing functional vanishes identically there."""


class ChartReduction:
    """Reduction data on one chart.

    `kept` lists the original slot indices the gram rows correspond to.
    When `cleared` is true the gram is the pi-cleared frame and satisfies
    the determinant identity above; otherwise the pivot was constant and
    the gram is the exact descended form.
    """

    __slots__ = ("chart_id", "kept", "pivot_slot", "pivot", "cleared", "gram",
                 "functional", "post_slots")

    def __init__(self, chart_id, kept, pivot_slot, pivot, cleared, gram,
                 functional, post_slots):
        self.chart_id = chart_id
        self.kept = tuple(kept)
        self.pivot_slot = pivot_slot
        self.pivot = pivot
        self.cleared = cleared
        self.gram = tuple(tuple(row) for row in gram)
        self.functional = tuple(functional)
        self.post_slots = tuple(post_slots)


class ReductionResult:
    __slots__ = ("direction", "v_slot", "form", "form_kept", "pivot_slot",
                 "quotient_form", "charts", "failures")

    def __init__(self, direction, v_slot, form, form_kept, pivot_slot,
                 quotient_form, charts, failures):
        self.direction = direction
        self.v_slot = v_slot
        self.form = form
        self.form_kept = form_kept
        self.pivot_slot = pivot_slot
        self.quotient_form = quotient_form
        self.charts = charts
        self.failures = failures


def _phi_row(mat, v_comps):
    n = len(mat)
    out = []
    for i in range(n):
        acc = v_comps[0] * mat[0][i]
        for j in range(1, n):
            acc = acc + v_comps[j] * mat[j][i]
        out.append(acc)
    return out


def _nonzero_const(p):
    return not p.is_zero() and p.total_degree() == 0


def _eliminate_relations(mat, cols, v_comps, gb, field):
    """Quotient the chart matrix by its presentation columns.

    Returns (matrix, v components, kept original slots).  Raises
    ChartFrameError when some nonzero column has no constant unit entry.
    """
    n = len(mat)
    mat = [list(row) for row in mat]
    v = list(v_comps)
    kept = list(range(n))
    queue = [list(comps) for _, comps in cols]
    while queue:
        # take any column with a unit entry; dependent columns turn into
        # zero columns as their peers are eliminated, so order matters
        pick = None
        for qi, cand in enumerate(queue):
            if gb is not None:
                cand = [gb.normal_form(c) for c in cand]
            if all(c.is_zero() for c in cand):
                pick = (qi, cand, None)
                break
            for i, c in enumerate(cand):
                if _nonzero_const(c):
                    pick = (qi, cand, i)
                    break
            if pick is not None:
                break
        if pick is None:
            raise ChartFrameError(
                "presentation column has no unit entry on this chart"
            )
        qi, col, m = pick
        queue.pop(qi)
        if m is None:
            continue
        inv = field.inv(col[m].constant_value())
        v = [v[i] - v[m] * (col[i] * inv) for i in range(len(v)) if i != m]
        queue = [
            [q[i] - q[m] * (col[i] * inv) for i in range(len(q)) if i != m]
            for q in queue
        ]
        mat = [
            [mat[i][j] for j in range(len(mat)) if j != m]
            for i in range(len(mat))
            if i != m
        ]
        kept = [s for i, s in enumerate(kept) if i != m]
    return mat, v, kept


def _split_gram(mat, phi, pivot_idx, drop_idx, inv_pi):
    """Exact descended gram for a constant pivot, over the slots other than
    the pivot and the direction slot."""
    keep = [i for i in range(len(mat)) if i not in (pivot_idx, drop_idx)]
    gram = []
    for a in keep:
        row = []
        for b in keep:
            g = (
                mat[a][b]
                - phi[b] * inv_pi * mat[a][pivot_idx]
                - phi[a] * inv_pi * mat[pivot_idx][b]
                + phi[a] * phi[b] * (inv_pi * inv_pi) * mat[pivot_idx][pivot_idx]
            )
            row.append(g)
        gram.append(row)
    return gram, keep


def _cleared_gram(mat, phi, pivot_idx, drop_idx):
    """pi-cleared gram of the frame f_i = pi e_i - phi_i e_pivot."""
    pi = phi[pivot_idx]
    keep = [i for i in range(len(mat)) if i not in (pivot_idx, drop_idx)]
    gram = []
    for a in keep:
        row = []
        for b in keep:
            g = (
                pi * pi * mat[a][b]
                - pi * phi[b] * mat[a][pivot_idx]
                - pi * phi[a] * mat[pivot_idx][b]
                + phi[a] * phi[b] * mat[pivot_idx][pivot_idx]
            )
            row.append(g)
        gram.append(row)
    return gram, keep


def _pick_pivot(phi, gb, v_pos, avoid_pos):
    """Lowest-degree nonzero coefficient of phi, by (degree, index), never
    the direction slot, and skipping `avoid_pos` when another choice
    exists."""
    cands = []
    for i, p in enumerate(phi):
        if i == v_pos:
            continue
        q = gb.normal_form(p) if gb is not None else p
        if q.is_zero():
            continue
        cands.append((q.total_degree(), i))
    if not cands:
        return None
    preferred = [c for c in cands if c[1] != avoid_pos]
    return min(preferred or cands)[1]


def _rim_quotient_form(form, v_slot, v_weight):
    """Presented avatar of the quotient for a global split form: the input
    form pulled back along Lambda^2 W(-(t-w)) ->> ker(phi), W the summands
    other than v_slot, with the Koszul columns as presentation."""
    n = form.size
    w_slots = [i for i in range(n) if i != v_slot]
    tw = form.twist - v_weight
    phi = {i: form.entries[v_slot][i] for i in w_slots}
    b = {(i, j): form.entries[i][j] for i in w_slots for j in w_slots}
    pairs = list(combinations(w_slots, 2))
    degrees = [form.degrees[i] + form.degrees[j] - tw for i, j in pairs]
    entries = []
    for (i, j) in pairs:
        row = []
        for (k, l) in pairs:
            row.append(
                phi[j] * phi[l] * b[(i, k)]
                - phi[j] * phi[k] * b[(i, l)]
                - phi[i] * phi[l] * b[(j, k)]
                + phi[i] * phi[k] * b[(j, l)]
            )
        entries.append(row)
    zero = form.zero_poly()
    relations = []
    for (i, j, l) in combinations(w_slots, 3):
        col = [zero] * len(pairs)
        col[pairs.index((j, l))] = phi[i]
        col[pairs.index((i, l))] = -phi[j]
        col[pairs.index((i, j))] = phi[l]
        weight = form.degrees[i] + form.degrees[j] + form.degrees[l] - 2 * tw
        relations.append((weight, col))
    return GradedQuadraticForm(
        form.base, degrees, form.twist, entries=entries, relations=relations,
        field=form.field,
    )


def reduce_form(form, v, avoid_slot=None):
    """Reduce `form` along the isotropic direction `v`.

    Raises ValueError when v is not isotropic or has no constant unit
    coordinate.  Charts where no local frame exists are recorded in
    `failures` instead of aborting; at least one chart must succeed.
    """
    n = form.size
    if len(v.components) != n:
        raise ValueError("direction length does not match the form")
    v_slot = v.unit_slot()
    if v_slot is None:
        raise ValueError("direction has no constant unit coordinate")
    if not is_isotropic(form, v):
        raise ValueError("direction is not isotropic for this form")

    field = form.field
    global_form = None
    form_kept = None
    global_pivot = None
    quotient_form = None

    if form.entries is not None and not form.relations:
        phi = _phi_row(form.entries, v.components)
        pivot = _pick_pivot_constant(phi, v_slot, avoid_slot)
        if pivot is not None:
            inv_pi = field.inv(phi[pivot].constant_value())
            gram, keep = _split_gram(form.entries, phi, pivot, v_slot, inv_pi)
            global_form = GradedQuadraticForm(
                form.base,
                [form.degrees[i] for i in keep],
                form.twist,
                entries=gram,
                field=field,
            )
            form_kept = tuple(keep)
            global_pivot = pivot
        elif all(
            c.is_zero() for i, c in enumerate(v.components) if i != v_slot
        ):
            quotient_form = _rim_quotient_form(form, v_slot, v.weight)
    elif form.chart_entries is not None and not form.relations:
        pivot = _common_constant_pivot(form, v, v_slot, avoid_slot)
        if pivot is not None:
            chart_grams = {}
            keep = None
            for chart, mat in form.chart_matrices():
                phi = _phi_row(mat, v.components)
                inv_pi = field.inv(phi[pivot].constant_value())
                gram, keep = _split_gram(mat, phi, pivot, v_slot, inv_pi)
                chart_grams[chart.chart_id] = gram
            global_form = GradedQuadraticForm(
                form.base,
                [form.degrees[i] for i in keep],
                form.twist,
                chart_entries=chart_grams,
                field=field,
            )
            form_kept = tuple(keep)
            global_pivot = pivot

    charts = {}
    failures = {}
    for (chart, mat), (_, cols) in zip(form.chart_matrices(),
                                       form.chart_relations()):
        rels = getattr(chart, "relations", ())
        gb = groebner(list(rels)) if rels else None
        comps = v.components
        if form.entries is not None:
            comps = tuple(chart.restrict(c) for c in comps)
        try:
            mat_c, v_c, kept = _eliminate_relations(mat, cols, comps, gb, field)
        except ChartFrameError as e:
            failures[chart.chart_id] = str(e)
            continue
        phi = _phi_row(mat_c, v_c)
        v_pos = _position_of_unit(v_c, kept, v_slot)
        if v_pos is None:
            failures[chart.chart_id] = "direction is not a unit coordinate here"
            continue
        avoid_pos = kept.index(avoid_slot) if avoid_slot in kept else None
        const_cands = [
            i for i, p in enumerate(phi) if i != v_pos and _nonzero_const(p)
        ]
        preferred = [i for i in const_cands if i != avoid_pos]
        const_pos = (preferred or const_cands)[0] if const_cands else None
        if const_pos is not None:
            inv_pi = field.inv(phi[const_pos].constant_value())
            gram, keep_pos = _split_gram(mat_c, phi, const_pos, v_pos, inv_pi)
            charts[chart.chart_id] = ChartReduction(
                chart.chart_id,
                [kept[i] for i in keep_pos],
                kept[const_pos],
                phi[const_pos],
                False,
                gram,
                phi,
                kept,
            )
            continue
        piv = _pick_pivot(phi, gb, v_pos, avoid_pos)
        if piv is None:
            failures[chart.chart_id] = "pairing functional vanishes on this chart"
            continue
        gram, keep_pos = _cleared_gram(mat_c, phi, piv, v_pos)
        charts[chart.chart_id] = ChartReduction(
            chart.chart_id,
            [kept[i] for i in keep_pos],
            kept[piv],
            phi[piv],
            True,
            gram,
            phi,
            kept,
        )

    if not charts:
        raise ChartFrameError("reduction failed on every chart")
    return ReductionResult(
        v, v_slot, global_form, form_kept, global_pivot, quotient_form,
        charts, failures,
    )


def _pick_pivot_constant(phi, v_slot, avoid_slot):
    cands = [
        i for i, p in enumerate(phi) if i != v_slot and _nonzero_const(p)
    ]
    if not cands:
        return None
    preferred = [i for i in cands if i != avoid_slot]
    return (preferred or cands)[0]


def _common_constant_pivot(form, v, v_slot, avoid_slot):
    """A slot whose phi coefficient is a nonzero constant on every chart, or
    None."""
    common = None
    for chart, mat in form.chart_matrices():
        phi = _phi_row(mat, v.components)
        here = {
            i for i, p in enumerate(phi) if i != v_slot and _nonzero_const(p)
        }
        common = here if common is None else common & here
        if not common:
            return None
    preferred = sorted(i for i in common if i != avoid_slot)
    return preferred[0] if preferred else sorted(common)[0]


def _position_of_unit(v_comps, kept, v_slot):
    """Position of the direction's unit coordinate in the post-elimination
    slot list."""
    if v_slot in kept:
        pos = kept.index(v_slot)
        if _nonzero_const(v_comps[pos]):
            return pos
    for i, c in enumerate(v_comps):
        if _nonzero_const(c):
            return i
    return None


# -- extensions --------------------------------------------------------------


def extend_c4(q0, q1, q2, l1, l2, l3):
    """The rank-5 extension of the cubic-corner matrix with corner x3*q0.

    Takes three quadrics and three linear forms in x0..x3; returns the
    5x5 form on P^3 with summand degrees (-1, 0, 0, 0, 1) and twist 1,
    whose reduction along the last coordinate direction is exactly

        [[x3*q0, q1, q2], [q1, l1, l2], [q2, l2, l3]].
    """
    field = q0.field
    for p, d in ((q0, 2), (q1, 2), (q2, 2), (l1, 1), (l2, 1), (l3, 1)):
        if p.nvars != 4:
            raise ValueError("inputs must be polynomials in x0..x3")
        hom, deg = p.is_homogeneous()
        if not (hom and (p.is_zero() or deg == d)):
            raise ValueError(f"expected a homogeneous input of degree {d}")
    base = ProjSpace(3, field)
    zero = Polynomial.zero(field, 4)
    one = Polynomial.constant(field, 4, field.one())
    x3 = Polynomial.variable(field, 4, 3)
    mhalf_x3 = x3 * field.coerce(Fraction(-1, 2))
    rows = [
        [zero, q1, q2, q0, mhalf_x3],
        [q1, l1, l2, zero, zero],
        [q2, l2, l3, zero, zero],
        [q0, zero, zero, zero, one],
        [mhalf_x3, zero, zero, one, zero],
    ]
    return GradedQuadraticForm(
        base, (-1, 0, 0, 0, 1), 1, entries=rows, field=field,
    )


def extend_gm21(base, phi, a, l1, l2):
    """The rank-5 extension over a quadric threefold in Gr(2,4).

    `phi` maps each chart id to a symmetric 2x2 matrix of chart functions,
    `a` maps each chart id to a 2-vector, and l1, l2 are 6-coefficient
    hyperplane classes.  The corner of the corresponding 3x3 form is the
    product of the two hyperplane restrictions; reducing the extension
    along the third coordinate direction recovers

        [[phi11, phi12, a1], [phi12, phi22, a2], [a1, a2, -2*l1*l2]]

    up to the normalization of the corner (the reduction produces the
    -2*l1*l2 corner exactly).
    """
    chart_entries = {}
    for chart in base.charts():
        cid = chart.chart_id
        ps = chart.plucker()
        zero = Polynomial.zero(base.field, 4)
        one = Polynomial.constant(base.field, 4, base.field.one())
        lin1 = zero
        lin2 = zero
        for c1, c2, q in zip(l1, l2, ps):
            lin1 = lin1 + q * c1
            lin2 = lin2 + q * c2
        f = phi[cid]
        av = a[cid]
        chart_entries[cid] = [
            [f[0][0], f[0][1], zero, zero, av[0]],
            [f[0][1], f[1][1], zero, zero, av[1]],
            [zero, zero, zero, one, lin1],
            [zero, zero, one, zero, lin2],
            [av[0], av[1], lin1, lin2, zero],
        ]
    return GradedQuadraticForm(
        base, (0, 0, 0, 0, -1), 0, chart_entries=chart_entries,
        field=base.field,
    )
