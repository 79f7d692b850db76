"""Acceptance checks shared by ``quadred verify-all`` and the test suite.

Each item function returns a strict-JSON dict with ``id``, ``ok``,
``expected`` and ``computed``.  :func:`run_suite` executes the requested
items in canonical order, stamps per-item wall-clock times, and reports
overall status.  The same items back ``tests/test_acceptance.py``, so the
command line and the test suite can never drift apart.
"""

import time

from .chow import (bundle_from_chern, c_top, chern_classes, degeneracy_example,
                   flag_bundle, grassmannian_2_4, integral, line_bundle,
                   nodal_cover_invariants, point, projective_space, scene,
                   sigma1, surface_invariants, symmetric_degeneracy_count,
                   trivial)
from .poly import (DEFAULT_BUDGET, Polynomial, RngState, determinant,
                   divide_exact, groebner, prime_field, quotient_dimension,
                   random_homogeneous, squarefree_part)
from .quadbundle import (IsotropicDirection, counted_family, generate_family,
                         orthogonality_divisor, reduce_form)

ITEM_IDS = (
    "1-invariant-tables",
    "2-partner-scenes",
    "3-degeneracy-counts",
    "4-node-counts",
    "5-hyperbolic-round-trip",
    "6-cover-and-slope",
    "7-engine-properties",
)

# wall-clock allowance per item, seconds
TIME_CAPS_S = {
    "1-invariant-tables": 30,
    "2-partner-scenes": 60,
    "3-degeneracy-counts": 30,
    "4-node-counts": 300,
    "5-hyperbolic-round-trip": 120,
    "6-cover-and-slope": 30,
    "7-engine-properties": 120,
}

# (chi_O, euler, K2, chi(-K), chi(T)) per scene
INVARIANT_TABLE = {
    "C4_R62_F": (6, 62, 10, 16, -40),
    "GM20_F": (12, 96, 48, 60, -24),
    "GM21_F": (7, 68, 16, 23, -38),
}

PARTNER_SCENES = (("K3_31_F", "GM20_F"), ("K3_35_F", "GM21_F"))

DEGENERACY_COUNTS = {"c4": 16, "gm20": 40, "gm21": 20, "verra": 72}

NODE_COUNTS = {"C4": 16, "GM21": 20, "GM20_CHART": 40}

MAX_RESAMPLE_RATE = 0.2

# (e, K2, nodes) of the nodal surface feeding each double cover
COVER_INPUTS = {
    "C4_R62_F": (55, 5, 16),
    "GM20_F": (108, 24, 40),
    "GM21_F": (64, 8, 20),
}


def _item_invariant_tables(seed, primes, budget):
    computed = {}
    for name in INVARIANT_TABLE:
        computed[name] = list(surface_invariants(scene(name)).as_tuple())
    expected = {name: list(tup) for name, tup in INVARIANT_TABLE.items()}
    return {
        "id": "1-invariant-tables",
        "ok": computed == expected,
        "expected": expected,
        "computed": computed,
    }


def _item_partner_scenes(seed, primes, budget):
    computed = {}
    ok = True
    for variant, reference in PARTNER_SCENES:
        got = list(surface_invariants(scene(variant)).as_tuple())
        want = list(surface_invariants(scene(reference)).as_tuple())
        computed[variant] = got
        computed[reference] = want
        ok = ok and got == want
    return {
        "id": "2-partner-scenes",
        "ok": ok,
        "expected": "each variant scene matches its reference tuple exactly",
        "computed": computed,
    }


def _item_degeneracy_counts(seed, primes, budget):
    computed = {}
    for name in DEGENERACY_COUNTS:
        X, E, L, r, pol, power, _ = degeneracy_example(name)
        computed[name] = symmetric_degeneracy_count(X, E, L, r, pol, power)
    return {
        "id": "3-degeneracy-counts",
        "ok": computed == DEGENERACY_COUNTS,
        "expected": dict(DEGENERACY_COUNTS),
        "computed": computed,
    }


def _item_node_counts(seed, primes, budget):
    runs = []
    resamples = 0
    attempts = 0
    ok = True
    for name, want in NODE_COUNTS.items():
        for p in primes:
            for s in range(seed, seed + 5):
                fc = counted_family(name, s, p, budget=budget)
                total = fc.report.total if fc.report is not None else None
                good = fc.ok and total == want
                runs.append({"family": name, "prime": p, "seed": s,
                             "total": total, "resamples": fc.resamples,
                             "ok": good})
                resamples += fc.resamples
                attempts += len(fc.attempts)
                ok = ok and good
    rate = resamples / attempts if attempts else 0.0
    ok = ok and rate < MAX_RESAMPLE_RATE
    expected = dict(NODE_COUNTS)
    expected["max_resample_rate"] = MAX_RESAMPLE_RATE
    return {
        "id": "4-node-counts",
        "ok": ok,
        "expected": expected,
        "computed": {"runs": runs, "resample_rate": rate},
    }


def _scalar_ratio(f, g):
    """The unit lam with f == lam * g, or None."""
    if f.is_zero() or g.is_zero() or set(f.terms) != set(g.terms):
        return None
    k = next(iter(f.terms))
    lam = f.field.coerce(f.terms[k]) * f.field.inv(g.terms[k])
    if f.field.p is not None:
        lam %= f.field.p
    return lam if f == g * lam else None


def _c4_round_trip(field, s):
    y5 = generate_family("Y_C4_R62", s, field)
    partner = generate_family("C4_WITH_PLANE", s, field)
    checks = {}

    red = reduce_form(y5, IsotropicDirection.coordinate(y5, 4))
    checks["round_trip"] = (red.form is not None
                            and red.form.entries == partner.entries
                            and red.form.degrees == partner.degrees
                            and red.form.twist == partner.twist)

    det5 = determinant([list(r) for r in y5.entries])
    det3 = determinant([list(r) for r in partner.entries])
    checks["det_ratio"] = _scalar_ratio(det5, det3) is not None

    deep = reduce_form(y5, IsotropicDirection.coordinate(y5, 0))
    chart_ok = deep.form is None and not deep.failures
    for chart in y5.base.charts():
        cr = deep.charts[chart.chart_id]
        g3 = determinant([list(r) for r in cr.gram])
        stripped = divide_exact(g3, cr.pivot ** 4) if cr.cleared else g3
        want = squarefree_part(chart.restrict(det5))
        chart_ok = chart_ok and (
            _scalar_ratio(squarefree_part(stripped), want) is not None)
    checks["deep_charts"] = chart_ok

    div = orthogonality_divisor(y5, IsotropicDirection.coordinate(y5, 4),
                                IsotropicDirection.coordinate(y5, 0))
    plane = div.total_degree() == 1 and list(div.used_vars()) == [3]
    corner = partner.entries[0][0]
    try:
        divide_exact(corner, div)
    except ValueError:
        plane = False
    checks["divisor_plane"] = plane
    return checks


def _gm21_round_trip(field, s):
    y5 = generate_family("Y_GM21_K335", s, field)
    partner = generate_family("GM21_TAU", s, field)
    checks = {}

    red = reduce_form(y5, IsotropicDirection.coordinate(y5, 2))
    checks["round_trip"] = (red.failures == {} and red.form is not None
                            and red.form.chart_entries == partner.chart_entries)

    deep = reduce_form(y5, IsotropicDirection.coordinate(y5, 4))
    det_ok = True
    for chart in y5.base.charts():
        cr = deep.charts[chart.chart_id]
        if not cr.cleared:
            det_ok = False
            continue
        det5 = determinant([list(r) for r in y5.chart_entries[chart.chart_id]])
        gb = groebner(list(chart.relations))
        lhs = gb.normal_form(determinant([list(r) for r in cr.gram]))
        rhs = gb.normal_form(cr.pivot ** 4 * det5)
        det_ok = det_ok and _scalar_ratio(lhs, rhs) is not None
    checks["deep_det_identity"] = det_ok

    divs = orthogonality_divisor(y5, IsotropicDirection.coordinate(y5, 2),
                                 IsotropicDirection.coordinate(y5, 4))
    div_ok = set(divs) == set(y5.chart_entries)
    for chart in y5.base.charts():
        d = divs.get(chart.chart_id)
        if d is None or d.total_degree() != 1:
            div_ok = False
            continue
        # the reduced corner vanishes on the divisor inside the chart
        corner = red.form.chart_entries[chart.chart_id][2][2]
        gb = groebner([d] + list(chart.relations))
        div_ok = div_ok and gb.normal_form(corner).is_zero()
    checks["divisor_section_locus"] = div_ok
    return checks


def _item_hyperbolic_round_trip(seed, primes, budget):
    field = prime_field(primes[0])
    rows = []
    ok = True
    for s in range(seed, seed + 5):
        row = {"seed": s}
        for prefix, fn in (("c4", _c4_round_trip), ("gm21", _gm21_round_trip)):
            for name, good in fn(field, s).items():
                row[prefix + "_" + name] = good
                ok = ok and good
        rows.append(row)
    return {
        "id": "5-hyperbolic-round-trip",
        "ok": ok,
        "expected": "every per-seed check true",
        "computed": rows,
    }


def _item_cover_and_slope(seed, primes, budget):
    rows = []
    ok = True
    for name, triple in COVER_INPUTS.items():
        inv = surface_invariants(scene(name))
        cover = nodal_cover_invariants(*triple)
        matches = cover == (inv.euler, inv.K2, inv.chi_O)
        row = {"scene": name, "cover": list(cover), "matches_table": matches,
               "noether": inv.noether_ok, "xiao": inv.xiao_strict}
        rows.append(row)
        ok = ok and matches and inv.noether_ok and inv.xiao_strict
    return {
        "id": "6-cover-and-slope",
        "ok": ok,
        "expected": "cover invariants match the tables; Noether and the "
                    "strict slope bound hold for all three",
        "computed": rows,
    }


def _monomial(field, nvars, exps):
    m = Polynomial.constant(field, nvars, 1)
    for i, e in enumerate(exps):
        if e:
            m = m * Polynomial.variable(field, nvars, i) ** e
    return m


def _random_poly(field, nvars, dmax, rng):
    acc = Polynomial.zero(field, nvars)
    for d in range(dmax + 1):
        acc = acc + random_homogeneous(field, nvars, d, rng)
    return acc


def _ring_axioms(field, rng, cases):
    for _ in range(cases):
        a = _random_poly(field, 3, 2, rng)
        b = _random_poly(field, 3, 2, rng)
        c = _random_poly(field, 3, 2, rng)
        if a * b != b * a:
            return False
        if (a + b) + c != a + (b + c):
            return False
        if (a * b) * c != a * (b * c):
            return False
        if (a + b) * c != a * c + b * c:
            return False
        if not (a - a).is_zero():
            return False
        if a * 1 != a or not (a * 0).is_zero():
            return False
    return True


def _det_strategies(field, rng, cases):
    for _ in range(cases):
        m = [[_random_poly(field, 2, 1, rng) for _ in range(3)]
             for _ in range(3)]
        if determinant(m) != determinant(m, method="bareiss"):
            return False
    return True


def _s_polys_reduce(field, rng, cases, budget):
    for _ in range(cases):
        gens = [random_homogeneous(field, 3, 2, rng),
                random_homogeneous(field, 3, 2, rng)
                + random_homogeneous(field, 3, 1, rng)]
        gb = groebner(gens, budget=budget)
        polys = gb.polys
        for i in range(len(polys)):
            for j in range(i + 1, len(polys)):
                mi = polys[i].leading_monomial()
                mj = polys[j].leading_monomial()
                lcm = tuple(max(a, b) for a, b in zip(mi, mj))
                s = (_monomial(field, 3, tuple(l - a for l, a in zip(lcm, mi)))
                     * polys[i]
                     - _monomial(field, 3, tuple(l - a for l, a in zip(lcm, mj)))
                     * polys[j])
                if not gb.normal_form(s).is_zero():
                    return False
    return True


def _brute_staircase_dim(lms, bound):
    dim = 0
    for e0 in range(bound):
        for e1 in range(bound):
            for e2 in range(bound):
                m = (e0, e1, e2)
                if not any(all(a >= b for a, b in zip(m, lm)) for lm in lms):
                    dim += 1
    return dim


def _quotient_dims(field, rng, cases, budget):
    for _ in range(cases):
        gens = []
        for i in range(3):
            d = 1 + rng.next_mod(3)
            g = _monomial(field, 3, tuple(d if k == i else 0 for k in range(3)))
            if d > 1:
                g = g + random_homogeneous(field, 3, d - 1, rng)
            gens.append(g)
        dim = quotient_dimension(gens, budget=budget)
        gb = groebner(gens, budget=budget)
        lms = [g.leading_monomial() for g in gb.polys]
        if dim != _brute_staircase_dim(lms, 4):
            return False
    return True


def _whitney(rng, cases):
    P3 = projective_space(3)
    h = P3.ring.gen(0)
    # normalization: trivial bundles have trivial total class, and a line
    # bundle's first Chern class is its divisor class
    if any(not chern_classes(trivial(P3, 3), up_to=3)[k].is_zero()
           for k in range(1, 4)):
        return False
    if chern_classes(line_bundle(P3, h))[1] != h:
        return False
    one = P3.ring.const(1)
    for _ in range(cases):
        a1, a2, b1, b2 = (rng.next_mod(9) - 4 for _ in range(4))
        A = bundle_from_chern(P3, 2, [one, h * a1, h ** 2 * a2])
        B = bundle_from_chern(P3, 2, [one, h * b1, h ** 2 * b2])
        cs = chern_classes(A + B, up_to=3)
        total = (1 + h * a1 + h ** 2 * a2) * (1 + h * b1 + h ** 2 * b2)
        for k in range(4):
            if cs[k] != total.component(k):
                return False
    return True


def _classical_scenes():
    for n in range(1, 6):
        P = projective_space(n)
        if integral(P, c_top(P.tangent)) != n + 1:
            return False
    G = grassmannian_2_4()
    if integral(G, c_top(G.tangent)) != 6:
        return False
    if integral(G, sigma1(G) ** 4) != 2:
        return False
    pt = point()
    fl3 = flag_bundle(pt, trivial(pt, 3), [1, 1, 1])
    if integral(fl3, c_top(fl3.tangent)) != 6:
        return False
    fl125 = flag_bundle(pt, trivial(pt, 5), [1, 1, 3])
    return integral(fl125, c_top(fl125.tangent)) == 20


def _item_engine_properties(seed, primes, budget):
    field = prime_field(primes[0])
    rng = RngState(seed * 1000003 + 11)
    blocks = [
        {"name": "poly-ring-axioms", "cases": 120,
         "ok": _ring_axioms(field, rng, 120)},
        {"name": "det-strategies", "cases": 100,
         "ok": _det_strategies(field, rng, 100)},
        {"name": "groebner-s-polys", "cases": 100,
         "ok": _s_polys_reduce(field, rng, 100, budget)},
        {"name": "quotient-dimension", "cases": 100,
         "ok": _quotient_dims(field, rng, 100, budget)},
        {"name": "chow-whitney", "cases": 100,
         "ok": _whitney(rng, 100)},
        {"name": "chow-classics", "cases": 9, "ok": _classical_scenes()},
    ]
    return {
        "id": "7-engine-properties",
        "ok": all(b["ok"] for b in blocks),
        "expected": "every property block passes",
        "computed": blocks,
    }


_ITEMS = {
    "1-invariant-tables": _item_invariant_tables,
    "2-partner-scenes": _item_partner_scenes,
    "3-degeneracy-counts": _item_degeneracy_counts,
    "4-node-counts": _item_node_counts,
    "5-hyperbolic-round-trip": _item_hyperbolic_round_trip,
    "6-cover-and-slope": _item_cover_and_slope,
    "7-engine-properties": _item_engine_properties,
}


def run_item(item_id, seed=1, primes=(10007, 31991), budget=DEFAULT_BUDGET):
    """Run one acceptance item and stamp its wall time."""
    if item_id not in _ITEMS:
        raise ValueError(f"unknown suite item {item_id!r}")
    t0 = time.perf_counter()
    row = _ITEMS[item_id](seed, tuple(primes), budget)
    row["wall_time_ms"] = int((time.perf_counter() - t0) * 1000)
    row["time_cap_s"] = TIME_CAPS_S[item_id]
    return row


def run_suite(seed=1, primes=(10007, 31991), budget=DEFAULT_BUDGET,
              items=None):
    """Run the acceptance items in canonical order.

    Returns {"ok": bool, "items": [...]} with items sorted by id.
    """
    chosen = ITEM_IDS if items is None else tuple(items)
    rows = [run_item(iid, seed, primes, budget) for iid in sorted(chosen)]
    return {"ok": all(r["ok"] for r in rows), "items": rows}
