"""Scenes: a presented ring, a dimension, a tangent class, and an integral.

A zero-locus scene keeps its ambient ring and folds the top Chern class of
the defining bundle into the integration measure, so integrals of restricted
classes come out right without re-presenting the ring.
"""

from fractions import Fraction

from ..poly import GREVLEX, QQ, Polynomial, groebner
from .bundle import BundleClass, c_top, exp_class, line_bundle
from .ring import ChowClass, ChowRing
from .series import (character_from_chern, chern_from_character,
                     series_inverse, series_mul, weighted_components)

_TOWER_GB_BUDGET = 50_000_000


class Scene:
    __slots__ = ("ring", "dim", "tangent", "measure", "registry", "name")

    def __init__(self, ring: ChowRing, dim: int, measure=None, name=""):
        self.ring = ring
        self.dim = dim
        self.measure = measure if measure is not None else ring.const(1)
        self.tangent = None
        self.registry = {}
        self.name = name

    def integrate(self, c: ChowClass) -> Fraction:
        if c.ring is not self.ring:
            raise ValueError("class belongs to a different ring")
        return self.ring.integral_raw(c * self.measure)

    def gen_class(self, name: str) -> ChowClass:
        return self.ring.gen_by_name(name)

    def __repr__(self):
        label = self.name or "scene"
        return f"<{label}: dim {self.dim}, ring {self.ring!r}>"


def integral(X: Scene, c: ChowClass) -> Fraction:
    """Integrate the top-degree component of c over X (0 if there is none)."""
    return X.integrate(c)


def point() -> Scene:
    ring = ChowRing((), (), [], 0, Polynomial.constant(QQ, 0, 1))
    S = Scene(ring, 0, name="pt")
    S.tangent = BundleClass(S, 0, ring.zero())
    return S


def projective_space(n: int, var: str = "h") -> Scene:
    if n < 1:
        raise ValueError("projective space needs n >= 1")
    h_poly = Polynomial.variable(QQ, 1, 0)
    ring = ChowRing((var,), (1,), [h_poly ** (n + 1)], n, h_poly ** n)
    S = Scene(ring, n, name=f"P{n}")
    h = ring.gen(0)
    S.tangent = BundleClass(S, n, exp_class(h) * (n + 1) - 1)
    S.registry["O(1)"] = line_bundle(S, h)
    return S


def product(a: Scene, b: Scene) -> Scene:
    if set(a.ring.names) & set(b.ring.names):
        raise ValueError("scenes share generator names")
    names = a.ring.names + b.ring.names
    weights = a.ring.weights + b.ring.weights
    na, nb = a.ring.nvars, b.ring.nvars
    shift = list(range(na, na + nb))
    lift_a = lambda p: p.pad(na + nb)
    lift_b = lambda p: p.map_vars(shift, na + nb)
    rels = [lift_a(r) for r in a.ring.relations] + [lift_b(r) for r in b.ring.relations]
    point_poly = lift_a(a.ring.point_poly) * lift_b(b.ring.point_poly)
    ring = ChowRing(names, weights, rels, a.ring.dim + b.ring.dim, point_poly)
    measure = ring.reduce(lift_a(a.measure.poly) * lift_b(b.measure.poly))
    S = Scene(ring, a.dim + b.dim, measure,
              name=f"{a.name}x{b.name}" if a.name and b.name else "")
    ta = ring.reduce(lift_a(a.tangent.ch.poly))
    tb = ring.reduce(lift_b(b.tangent.ch.poly))
    S.tangent = BundleClass(S, a.tangent.rank + b.tangent.rank, ta + tb)
    for key, E in a.registry.items():
        S.registry[key] = BundleClass(S, E.rank, ring.reduce(lift_a(E.ch.poly)))
    for key, E in b.registry.items():
        S.registry[key] = BundleClass(S, E.rank, ring.reduce(lift_b(E.ch.poly)))
    return S


def pullback_class(X: Scene, c: ChowClass) -> ChowClass:
    """Lift a class along a ring extension by trailing generators."""
    src = c.ring
    if X.ring.names[:src.nvars] != src.names:
        raise ValueError("target ring does not extend the class's ring")
    return X.ring.reduce(c.poly.pad(X.ring.nvars))


def pullback(X: Scene, E: BundleClass) -> BundleClass:
    return BundleClass(X, E.rank, pullback_class(X, E.ch))


_GEN_COUNTER = [0]


def _fresh_names(k):
    out = []
    for _ in range(k):
        _GEN_COUNTER[0] += 1
        out.append(f"s{_GEN_COUNTER[0]}")
    return out


def _make_mul(rels):
    gb = groebner(list(rels), GREVLEX, budget=_TOWER_GB_BUDGET) if rels else None

    def mul(x, y):
        prod = x * y
        return gb.normal_form(prod) if gb is not None else prod

    return mul, gb


def _dual_poly(ch_poly, weights):
    terms = {}
    for mono, c in ch_poly.terms.items():
        d = sum(e * w for e, w in zip(mono, weights))
        terms[mono] = -c if d % 2 else c
    return Polynomial._raw(QQ, len(weights), terms)


def flag_bundle(base: Scene, E: BundleClass, quotient_ranks) -> Scene:
    """Relative flag variety of filtrations of E with successive graded pieces
    of the given ranks, the first entry deepest.

    Built as a tower of Grassmann bundles from the top of the filtration down.
    Each step adjoins the Chern classes of the tautological sub; the step's
    relations are the components of c(E_t)/c(S_t) beyond the quotient's rank.
    """
    if E.ch.ring is not base.ring:
        raise ValueError("bundle does not live on the base")
    quotient_ranks = list(quotient_ranks)
    if not quotient_ranks or min(quotient_ranks) < 1:
        raise ValueError("quotient ranks must be positive")
    if sum(quotient_ranks) != E.rank:
        raise ValueError("rank mismatch")

    # Final ambient dimension, known in advance from the ranks alone.
    final_dim = base.ring.dim
    r = E.rank
    for q in reversed(quotient_ranks[1:]):
        k = r - q
        final_dim += k * q
        r = k

    names = list(base.ring.names)
    weights = list(base.ring.weights)
    rels = list(base.ring.relations)
    point_poly = base.ring.point_poly
    tangent_extra = []   # (ch poly, rank) in the growing context
    pieces = []          # step quotients, top graded piece first: (rank, ch poly)
    subs = []            # successive subs, outermost first: (rank, ch poly)
    e_ch_poly = E.ch.poly
    e_rank = E.rank

    for q in reversed(quotient_ranks[1:]):
        k = e_rank - q
        old_n = len(names)
        nvars = old_n + k
        names += _fresh_names(k)
        weights += list(range(1, k + 1))
        rels = [rel.pad(nvars) for rel in rels]
        point_poly = point_poly.pad(nvars)
        e_ch_poly = e_ch_poly.pad(nvars)
        tangent_extra = [(p.pad(nvars), rk) for p, rk in tangent_extra]
        pieces = [(rk, p.pad(nvars)) for rk, p in pieces]
        subs = [(rk, p.pad(nvars)) for rk, p in subs]

        mul, _ = _make_mul(rels)
        one = Polynomial.constant(QQ, nvars, 1)
        zero = Polynomial.zero(QQ, nvars)
        c_sub = [one] + [Polynomial.variable(QQ, nvars, old_n + i) for i in range(k)]
        c_sub += [zero] * (e_rank - k)
        ch_e_comps = weighted_components(e_ch_poly, weights, e_rank)
        c_e = chern_from_character(ch_e_comps, e_rank, mul)
        c_quot = series_mul(c_e, series_inverse(c_sub, e_rank, mul), e_rank, mul)
        rels += [c_quot[j] for j in range(q + 1, e_rank + 1) if not c_quot[j].is_zero()]

        # From here on reduce against this step's relations too.
        mul, _ = _make_mul(rels)
        ch_sub_comps = character_from_chern(c_sub[:k + 1], k, final_dim, mul)
        ch_sub = zero
        for c in ch_sub_comps:
            ch_sub = ch_sub + c
        ch_quot = e_ch_poly - ch_sub
        tangent_extra.append((mul(_dual_poly(ch_sub, weights), ch_quot), k * q))
        point_poly = mul(point_poly, c_quot[q] ** k)
        pieces.append((q, ch_quot))
        subs.append((k, ch_sub))
        e_ch_poly = ch_sub
        e_rank = k

    nvars = len(names)
    ring = ChowRing(tuple(names), tuple(weights), rels, final_dim, point_poly)
    S = Scene(ring, base.dim + (final_dim - base.ring.dim),
              ring.reduce(base.measure.poly.pad(nvars)))
    t_rank = base.tangent.rank
    t_ch = base.tangent.ch.poly.pad(nvars)
    for p, rk in tangent_extra:
        t_ch = t_ch + p.pad(nvars)
        t_rank += rk
    S.tangent = BundleClass(S, t_rank, ring.reduce(t_ch))
    for key, B in base.registry.items():
        S.registry[key] = BundleClass(S, B.rank, ring.reduce(B.ch.poly.pad(nvars)))
    S.registry["E"] = BundleClass(S, E.rank, ring.reduce(E.ch.poly.pad(nvars)))
    m = len(quotient_ranks)
    for t, (rk, p) in enumerate(pieces):
        S.registry[f"B{m - t}"] = BundleClass(S, rk, ring.reduce(p.pad(nvars)))
    S.registry["B1"] = BundleClass(S, e_rank, ring.reduce(e_ch_poly.pad(nvars)))
    cums = []
    c = 0
    for rk in quotient_ranks[:-1]:
        c += rk
        cums.append(c)
    for (rk, p), cr in zip(subs, reversed(cums)):
        S.registry[f"U{cr}"] = BundleClass(S, rk, ring.reduce(p.pad(nvars)))
    return S


def section_zero_locus(X: Scene, V: BundleClass) -> Scene:
    """Numerical model of the zero locus of a general section of V."""
    if V.ch.ring is not X.ring:
        raise ValueError("bundle does not live on this scene")
    if V.rank < 1 or V.rank > X.dim:
        raise ValueError("rank out of range for a zero locus")
    top = c_top(V)
    S = Scene(X.ring, X.dim - V.rank, X.measure * top)
    S.tangent = BundleClass(S, X.tangent.rank - V.rank, X.tangent.ch - V.ch)
    S.registry = dict(X.registry)
    return S
