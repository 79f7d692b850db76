"""Named surface scenes and the standard example data sets."""

from fractions import Fraction
from functools import lru_cache

from .bundle import (BundleClass, chern_classes, det, dual, exp_class,
                     line_bundle, sym, tensor, trivial)
from .scene import (Scene, flag_bundle, point, product, projective_space,
                    pullback, section_zero_locus)

SCENE_NAMES = ("C4_R62_F", "GM20_F", "GM21_F", "K3_31_F", "K3_35_F")


@lru_cache(maxsize=None)
def _p3() -> Scene:
    return projective_space(3)


@lru_cache(maxsize=None)
def grassmannian_2_4() -> Scene:
    pt = point()
    G = flag_bundle(pt, trivial(pt, 4), [2, 2])
    G.name = "Gr(2,4)"
    return G


def sigma1(G: Scene):
    """Hyperplane class of the rank-2-sub tautological geometry."""
    U = G.registry["B1"]
    return -chern_classes(U, 1)[1]


@lru_cache(maxsize=None)
def quadric_threefold() -> Scene:
    """Hyperplane section of the Plucker quadric's ambient grassmannian."""
    G = grassmannian_2_4()
    Q = section_zero_locus(G, line_bundle(G, sigma1(G)))
    Q.name = "Q3"
    return Q


@lru_cache(maxsize=None)
def _c4_r62() -> Scene:
    P3 = _p3()
    h = P3.ring.gen(0)
    E = line_bundle(P3, -h) + trivial(P3, 3)
    fl = flag_bundle(P3, E, [1, 2, 1])
    U1 = fl.registry["B1"]
    B2 = fl.registry["B2"]
    O1 = pullback(fl, P3.registry["O(1)"])
    V = tensor(dual(tensor(U1, B2)), O1 + trivial(fl, 2))
    S = section_zero_locus(fl, V)
    S.name = "C4_R62_F"
    return S


def _gm20_bundle(P3: Scene) -> BundleClass:
    """The rank-3 bundle whose dual has character 5e^h - e^{2h} - 1."""
    h = P3.ring.gen(0)
    ch_dual = exp_class(h) * 5 - exp_class(h * 2) - 1
    return dual(BundleClass(P3, 3, ch_dual))


@lru_cache(maxsize=None)
def _gm20() -> Scene:
    P3 = _p3()
    fl = flag_bundle(P3, _gm20_bundle(P3), [2, 1])
    V = sym(dual(fl.registry["B1"]), 2)
    S = section_zero_locus(fl, V)
    S.name = "GM20_F"
    return S


@lru_cache(maxsize=None)
def _gm21() -> Scene:
    G = grassmannian_2_4()
    U = G.registry["B1"]
    E = trivial(G, 1) + U
    fl = flag_bundle(G, E, [1, 2])
    U1 = fl.registry["B1"]
    B2 = fl.registry["B2"]
    line = pullback(fl, det(dual(U)))
    V = line + sym(dual(tensor(U1, B2)), 2)
    S = section_zero_locus(fl, V)
    S.name = "GM21_F"
    return S


@lru_cache(maxsize=None)
def _k3_31() -> Scene:
    P3 = _p3()
    h = P3.ring.gen(0)
    ch_dual = (P3.ring.const(1) + exp_class(h) * 4 - exp_class(h * 2)
               - exp_class(-h))
    E = dual(BundleClass(P3, 3, ch_dual))
    fl = flag_bundle(P3, E, [2, 1])
    V = sym(dual(fl.registry["B1"]), 2)
    S = section_zero_locus(fl, V)
    S.name = "K3_31_F"
    return S


@lru_cache(maxsize=None)
def _k3_35() -> Scene:
    Q3 = quadric_threefold()
    G = grassmannian_2_4()
    U = BundleClass(Q3, 2, G.registry["B1"].ch)
    s1 = sigma1(G)
    ch_dual = Q3.ring.const(6) - U.ch - exp_class(-s1)
    F = dual(BundleClass(Q3, 3, ch_dual))
    fl = flag_bundle(Q3, F, [2, 1])
    V = sym(dual(fl.registry["B1"]), 2)
    S = section_zero_locus(fl, V)
    S.name = "K3_35_F"
    return S


_BUILDERS = {
    "C4_R62_F": _c4_r62,
    "GM20_F": _gm20,
    "GM21_F": _gm21,
    "K3_31_F": _k3_31,
    "K3_35_F": _k3_35,
}


def scene(name: str) -> Scene:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown scene {name!r}; expected one of {SCENE_NAMES}")
    return builder()


@lru_cache(maxsize=None)
def _p2xp2() -> Scene:
    return product(projective_space(2, "h1"), projective_space(2, "h2"))


def degeneracy_example(name: str):
    """Input tuple (X, E, L, r, polarization, power, expected) for the four
    reference degeneracy counts."""
    if name == "c4":
        P3 = _p3()
        h = P3.ring.gen(0)
        E = trivial(P3, 2) + line_bundle(P3, -h)
        return (P3, E, P3.registry["O(1)"], 2, P3.ring.const(1), 0, 16)
    if name == "gm20":
        P3 = _p3()
        return (P3, _gm20_bundle(P3), trivial(P3, 1), 2, P3.ring.const(1), 0, 40)
    if name == "gm21":
        Q3 = quadric_threefold()
        G = grassmannian_2_4()
        U = BundleClass(Q3, 2, G.registry["B1"].ch)
        s1 = sigma1(G)
        E = line_bundle(Q3, -s1) + U
        return (Q3, E, trivial(Q3, 1), 2, Q3.ring.const(1), 0, 20)
    if name == "verra":
        X = _p2xp2()
        h1 = X.ring.gen_by_name("h1")
        h2 = X.ring.gen_by_name("h2")
        f1 = X.ring.const(2) + h1 - h1 * h1 * Fraction(1, 2)
        f2 = X.ring.const(2) + h2 - h2 * h2 * Fraction(1, 2)
        T = BundleClass(X, 4, f1 * f2)
        return (X, dual(T), trivial(X, 1), 2, h1 + h2, 1, 72)
    raise ValueError(f"unknown degeneracy example {name!r}")


DEGENERACY_NAMES = ("c4", "gm20", "gm21", "verra")
