"""Counting nodes of discriminant hypersurfaces over prime fields.

The singular scheme is sliced into the disjoint strata x_i = 1, x_j = 0 for
j < i; each stratum is a zero-dimensional affine scheme whose vector-space
dimension counts singular points with multiplicity, so the total is the
number of geometric singular points exactly when every one of them is a
reduced point of the singular scheme.  At every rational singular point the
node condition is certified by a Hessian rank computation; drift of the
total away from the expected value is how a non-reduced (or worse) singular
point shows up.
"""

from ..poly import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    InfiniteDimensional,
    RngState,
    groebner,
    kernel_basis,
    prime_field,
    quotient_dimension,
    rational_points,
    rref,
)

__all__ = ["NodeReport", "count_nodes", "counted_family", "FamilyCount"]


class NodeReport:
    __slots__ = ("status", "total", "strata", "hessian_checks", "prime")

    def __init__(self, status, total, strata, hessian_checks, prime):
        self.status = status
        self.total = total
        self.strata = strata
        self.hessian_checks = hessian_checks
        self.prime = prime

    @property
    def odp_ok(self):
        return all(h["ok"] for h in self.hessian_checks)

    def as_dict(self):
        return {
            "status": self.status,
            "total": self.total,
            "strata": list(self.strata),
            "hessian_checks": [dict(h) for h in self.hessian_checks],
            "prime": self.prime,
        }


def count_nodes(disc, budget=DEFAULT_BUDGET):
    """Count the singular points of the discriminant in a report.

    Dispatches on the report: an intersection model (quartic section of a
    quadric) when present, otherwise the global hypersurface equation.
    """
    if disc.field.p is None:
        raise ValueError("node counting works over prime fields")
    if disc.section_equations is not None:
        f, g = disc.section_equations
        return _count_scheme(
            _intersection_gens(f, g), f.nvars, disc.field, budget,
            lambda pt: _odp_on_quadric(f, g, pt, disc.field),
        )
    if disc.global_equation is None:
        raise ValueError("report carries no global model to count on")
    f = disc.global_equation
    return _count_scheme(
        _hypersurface_gens(f), f.nvars, disc.field, budget,
        lambda pt: _odp_hypersurface(f, pt, disc.field),
    )


def _hypersurface_gens(f):
    gens = [f.diff(i) for i in range(f.nvars)]
    deg = f.total_degree()
    if deg % f.field.p == 0:
        gens.append(f)
    return gens


def _intersection_gens(f, g):
    n = f.nvars
    fd = [f.diff(k) for k in range(n)]
    gd = [g.diff(k) for k in range(n)]
    gens = [f, g]
    for a in range(n):
        for b in range(a + 1, n):
            gens.append(fd[a] * gd[b] - fd[b] * gd[a])
    return gens


def _restrict_stratum(poly, i):
    """Substitute x_i = 1 and x_j = 0 for j < i, then drop those
    variables."""
    subs = {i: 1}
    for j in range(i):
        subs[j] = 0
    out = poly.substitute(subs)
    for k in range(i, -1, -1):
        out = out.drop_var(k)
    return out


def _count_scheme(gens, nvars, field, budget, odp_check):
    strata = []
    hessians = []
    status = "finite"
    total = 0
    for i in range(nvars):
        restricted = [_restrict_stratum(g, i) for g in gens]
        nonzero = [g for g in restricted if not g.is_zero()]
        m = nvars - 1 - i
        if m == 0:
            dim = 0 if nonzero else 1
            strata.append({"chart": str(i), "dimension": dim})
            total += dim
            if dim:
                hessians.append(odp_check(_full_point(i, (), nvars, field)))
            continue
        if not nonzero:
            strata.append({"chart": str(i), "dimension": None})
            status = "positive_dimensional"
            continue
        if any(g.is_constant() for g in nonzero):
            strata.append({"chart": str(i), "dimension": 0})
            continue
        try:
            gb = groebner(nonzero, budget=budget)
            dim = quotient_dimension(gb, budget=budget)
        except BudgetExceeded:
            strata.append({"chart": str(i), "dimension": None})
            status = "budget_exceeded"
            break
        except InfiniteDimensional:
            strata.append({"chart": str(i), "dimension": None})
            status = "positive_dimensional"
            continue
        strata.append({"chart": str(i), "dimension": dim})
        total += dim
        if dim:
            for pt in rational_points(nonzero, budget=budget):
                hessians.append(
                    odp_check(_full_point(i, pt, nvars, field))
                )
    if status != "finite":
        total = None
    return NodeReport(status, total, strata, hessians, field.p)


def _full_point(i, stratum_pt, nvars, field):
    return tuple([0] * i + [1] + list(stratum_pt))


def _second_partials(f):
    n = f.nvars
    firsts = [f.diff(a) for a in range(n)]
    return [[firsts[a].diff(b) for b in range(n)] for a in range(n)]


def _chart_index(pt):
    for k, c in enumerate(pt):
        if c == 1:
            return k
    raise ValueError("point is not in stratum form")


def _odp_hypersurface(f, pt, field):
    """Rank of the affine Hessian on the chart of the leading coordinate;
    full rank is the node condition for a hypersurface."""
    i = _chart_index(pt)
    n = f.nvars
    hess = _second_partials(f)
    idx = [a for a in range(n) if a != i]
    rows = [[hess[a][b].evaluate(pt) for b in idx] for a in idx]
    _, pivots = rref(rows, len(idx), field.p)
    rank = len(pivots)
    return {
        "point": tuple(pt),
        "chart": str(i),
        "rank": rank,
        "ok": rank == len(idx),
    }


def _odp_on_quadric(f, g, pt, field):
    """Node condition for a point of {f = g = 0} sitting on the smooth
    quadric {g = 0}: the Hessian of f - lambda*g restricted to the tangent
    space of the quadric has full rank 3."""
    i = _chart_index(pt)
    n = f.nvars
    idx = [a for a in range(n) if a != i]
    gd = [g.diff(k) for k in range(n)]
    fd = [f.diff(k) for k in range(n)]
    gvec = [gd[k].evaluate(pt) for k in idx]
    if all(c == 0 for c in gvec):
        return {"point": tuple(pt), "chart": str(i), "rank": -1, "ok": False}
    kstar = idx[[c != 0 for c in gvec].index(True)]
    lam = fd[kstar].evaluate(pt) * field.inv(gd[kstar].evaluate(pt)) % field.p
    hf = _second_partials(f)
    hg = _second_partials(g)
    hrows = [
        [
            (hf[a][b].evaluate(pt) - lam * hg[a][b].evaluate(pt)) % field.p
            for b in idx
        ]
        for a in idx
    ]
    tangent = kernel_basis([gvec], len(idx), field.p)
    tmat = []
    for u in tangent:
        row = []
        for v in tangent:
            acc = 0
            for a in range(len(idx)):
                for b in range(len(idx)):
                    acc += u[a] * hrows[a][b] * v[b]
            row.append(acc % field.p)
        tmat.append(row)
    _, pivots = rref(tmat, len(tangent), field.p)
    rank = len(pivots)
    return {
        "point": tuple(pt),
        "chart": str(i),
        "rank": rank,
        "ok": rank == len(tangent),
    }


class FamilyCount:
    """Outcome of counting a family's nodes with resampling past
    non-generic draws."""

    __slots__ = ("ok", "report", "attempts", "seed_used", "expected")

    def __init__(self, ok, report, attempts, seed_used, expected):
        self.ok = ok
        self.report = report
        self.attempts = attempts
        self.seed_used = seed_used
        self.expected = expected

    @property
    def resamples(self):
        return len(self.attempts) - 1

    def as_dict(self):
        return {
            "ok": self.ok,
            "expected": self.expected,
            "seed_used": self.seed_used,
            "attempts": [dict(a) for a in self.attempts],
            "report": self.report.as_dict() if self.report else None,
        }


def counted_family(name, seed, prime, budget=DEFAULT_BUDGET, max_resamples=8):
    """Generate a family instance, take its discriminant, and count nodes.

    A draw is rejected (and the seed deterministically re-derived) when the
    discriminant degenerates, a stratum fails to be finite, a rational
    singular point fails the node check, or the total drifts from the
    family's expected count.  Every attempt is logged; nothing is silently
    accepted.
    """
    from .discriminant import discriminant
    from .families import FAMILY_EXPECTED, FAMILY_NAMES, generate_family

    if name not in FAMILY_NAMES:
        raise ValueError(f"unknown family {name!r}")
    expected = FAMILY_EXPECTED.get(name, {}).get("nodes")
    field = prime_field(prime)
    attempts = []
    cur = seed
    report = None
    for k in range(max_resamples + 1):
        outcome = None
        try:
            form = generate_family(name, cur, field)
            disc = discriminant(form)
            report = count_nodes(disc, budget=budget)
        except ValueError as e:
            outcome = f"degenerate: {e}"
        else:
            if report.status != "finite":
                outcome = report.status
            elif not report.odp_ok:
                outcome = "hessian check failed"
            elif expected is not None and report.total != expected:
                outcome = f"count drift: {report.total} != {expected}"
        attempts.append({"seed": cur, "outcome": outcome or "ok"})
        if outcome is None:
            return FamilyCount(True, report, attempts, cur, expected)
        cur = RngState(cur).derive(k + 1).next()
    return FamilyCount(False, report, attempts, None, expected)
