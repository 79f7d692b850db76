"""Consistency checks between two reductions of the same form.

Reducing a form along two different isotropic directions must give the same
discriminant.  Per chart the cleared reduced Gram P of an n x n input (after
eliminating presentation columns) satisfies det P = +/- pi^(2n-6) det M, so
two reductions are compared through

    det(P1) * pi2^(2n-6) = +/- det(P2) * pi1^(2n-6)

modulo the chart relation (constant-pivot reductions carry pi^(-2) instead,
handled by cross-multiplying).  On top of that, the pairing divisor
D = v1^T M v2 is reported, and the image of each direction is checked to be
an isotropic coordinate of the other direction's reduced form modulo D.
"""

from ..poly import determinant, groebner
from .form import IsotropicDirection, orthogonality_divisor
from .reduce import reduce_form

__all__ = ["InvarianceReport", "verify_reduction_invariance", "demo_pair"]

DEMO_PAIRS = {
    "c4-r62": "Y_C4_R62",
    "gm21-k335": "Y_GM21_K335",
    "gm20-k331": "Y_GM20_K331_CHART",
}


class InvarianceReport:
    __slots__ = ("slots", "divisor", "divisor_degree", "chart_checks",
                 "section_checks", "ok")

    def __init__(self, slots, divisor, divisor_degree, chart_checks,
                 section_checks, ok):
        self.slots = slots
        self.divisor = divisor
        self.divisor_degree = divisor_degree
        self.chart_checks = chart_checks
        self.section_checks = section_checks
        self.ok = ok

    def as_dict(self):
        return {
            "slots": list(self.slots),
            "divisor_degree": self.divisor_degree,
            "chart_checks": [dict(c) for c in self.chart_checks],
            "section_checks": [dict(c) for c in self.section_checks],
            "ok": self.ok,
        }


def _chart_gb_of(form, chart_id):
    for chart in form.base.charts():
        if chart.chart_id == chart_id:
            rels = getattr(chart, "relations", ())
            return groebner(list(rels)) if rels else None
    return None


def _leading_ratio(a, b):
    if a.is_zero() or b.is_zero():
        return None
    ma, ca = next(iter(a.terms.items()))
    mb, cb = next(iter(b.terms.items()))
    if ma != mb:
        return None
    field = a.field
    if field.p is not None:
        return ca * field.inv(cb) % field.p
    return ca / cb


def _normalized_pair(red, other_red):
    """Cross-multiplied comparands for two chart reductions of the same
    matrix: each side is det(M) up to sign once the pivot powers are moved
    across."""
    if len(red.kept) != len(other_red.kept):
        raise ValueError("reductions come from different presentations")
    e = 2 * (len(red.kept) + 2) - 6
    det1 = determinant([list(r) for r in red.gram])
    det2 = determinant([list(r) for r in other_red.gram])
    lhs = det1
    rhs = det2
    if other_red.cleared:
        lhs = lhs * (other_red.pivot ** e)
    else:
        c = other_red.pivot.constant_value()
        rhs = rhs * (c * c)
    if red.cleared:
        rhs = rhs * (red.pivot ** e)
    else:
        c = red.pivot.constant_value()
        lhs = lhs * (c * c)
    return lhs, rhs


def verify_reduction_invariance(form, slot1, slot2):
    """Reduce along the coordinate directions slot1 and slot2 and check the
    two reductions describe the same degeneration divisor."""
    v1 = IsotropicDirection.coordinate(form, slot1)
    v2 = IsotropicDirection.coordinate(form, slot2)
    red1 = reduce_form(form, v1, avoid_slot=slot2)
    red2 = reduce_form(form, v2, avoid_slot=slot1)
    divisor = orthogonality_divisor(form, v1, v2)
    if isinstance(divisor, dict):
        div_by_chart = divisor
        divisor_degree = max(p.total_degree() for p in divisor.values())
    else:
        div_by_chart = None
        divisor_degree = divisor.total_degree()

    chart_checks = []
    common = sorted(set(red1.charts) & set(red2.charts))
    for cid in common:
        gb = _chart_gb_of(form, cid)
        lhs, rhs = _normalized_pair(red1.charts[cid], red2.charts[cid])
        if gb is not None:
            lhs = gb.normal_form(lhs)
            rhs = gb.normal_form(rhs)
        lam = _leading_ratio(lhs, rhs)
        if lam is None:
            ok = lhs.is_zero() and rhs.is_zero()
        else:
            diff = lhs - rhs * lam
            if gb is not None:
                diff = gb.normal_form(diff)
            ok = diff.is_zero()
        chart_checks.append({"chart": cid, "ok": ok,
                             "scale": None if lam is None else str(lam)})

    section_checks = []
    for red, this_slot, other_slot in ((red1, slot1, slot2),
                                       (red2, slot2, slot1)):
        for cid in common:
            cr = red.charts[cid]
            if other_slot not in cr.kept:
                section_checks.append({
                    "chart": cid, "reduced_along": this_slot,
                    "slot": other_slot, "ok": None,
                    "note": "slot consumed by the local frame",
                })
                continue
            pos = cr.kept.index(other_slot)
            entry = cr.gram[pos][pos]
            if div_by_chart is not None:
                dpoly = div_by_chart[cid]
            else:
                chart = next(
                    c for c in form.base.charts() if c.chart_id == cid
                )
                dpoly = chart.restrict(divisor) if not form.base.is_chart \
                    else divisor
            rels = []
            for chart in form.base.charts():
                if chart.chart_id == cid:
                    rels = list(getattr(chart, "relations", ()))
            ideal = [g for g in rels + [dpoly] if not g.is_zero()]
            if not ideal:
                section_checks.append({
                    "chart": cid, "reduced_along": this_slot,
                    "slot": other_slot, "ok": entry.is_zero(), "note": None,
                })
                continue
            gb = groebner(ideal)
            ok = gb.normal_form(entry).is_zero()
            section_checks.append({
                "chart": cid, "reduced_along": this_slot,
                "slot": other_slot, "ok": ok, "note": None,
            })

    ok = (
        bool(common)
        and all(c["ok"] for c in chart_checks)
        and all(c["ok"] is not False for c in section_checks)
    )
    return InvarianceReport(
        (slot1, slot2), divisor, divisor_degree, chart_checks,
        section_checks, ok,
    )


def demo_pair(pair, seed, prime, budget=None):
    """Build a named rank-5 family, verify the invariance of its two
    reductions, and count the nodes of its discriminant.  Returns a plain
    dict ready for serialization."""
    from ..poly import DEFAULT_BUDGET, prime_field
    from .discriminant import discriminant
    from .families import FAMILY_DIRECTIONS, FAMILY_EXPECTED, generate_family
    from .nodes import counted_family

    if pair not in DEMO_PAIRS:
        raise ValueError(f"unknown pair {pair!r}")
    if budget is None:
        budget = DEFAULT_BUDGET
    family = DEMO_PAIRS[pair]
    slot1, slot2 = FAMILY_DIRECTIONS[family]
    field = prime_field(prime)
    form = generate_family(family, seed, field)
    inv = verify_reduction_invariance(form, slot1, slot2)
    disc = discriminant(form)
    count = counted_family(family, seed, prime, budget=budget)
    return {
        "pair": pair,
        "family": family,
        "seed": seed,
        "prime": prime,
        "directions": [slot1, slot2],
        "invariance": inv.as_dict(),
        "discriminant": {
            "degree": disc.degree,
            "compatible": disc.compatible,
            "notes": list(disc.notes),
        },
        "nodes": count.as_dict(),
        "expected": FAMILY_EXPECTED.get(family, {}),
    }
