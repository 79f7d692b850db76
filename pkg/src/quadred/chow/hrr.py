"""Riemann-Roch: Todd classes, sheaf Euler characteristics, surface numbers."""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .bundle import BundleClass, chern_classes, det
from .ring import ChowClass
from .scene import Scene

# Coefficients a_m of log(x / (1 - e^{-x})) = sum a_m x^m, m >= 1, so that
# td(E) = exp(sum_m a_m p_m(E)) with p_m the power sums (= m! ch_m).
_TODD_LOG = [
    Fraction(1, 2),
    Fraction(-1, 24),
    Fraction(0),
    Fraction(1, 2880),
    Fraction(0),
    Fraction(-1, 181440),
    Fraction(0),
    Fraction(1, 9676800),
]


def todd_class(E: BundleClass) -> ChowClass:
    ring = E.ch.ring
    if ring.dim > 8:
        raise ValueError("Todd expansion table stops at degree 8")
    comps = E.ch.components()
    arg = ring.zero()
    for m in range(1, ring.dim + 1):
        a = _TODD_LOG[m - 1]
        if a and not comps[m].is_zero():
            arg = arg + comps[m] * (a * factorial(m))
    out = ring.const(1)
    term = ring.const(1)
    for k in range(1, ring.dim + 1):
        term = term * arg * Fraction(1, k)
        if term.is_zero():
            break
        out = out + term
    return out


def chi_sheaf(X: Scene, F: BundleClass) -> int:
    val = X.integrate(F.ch * todd_class(X.tangent))
    if val.denominator != 1:
        raise ValueError(f"non-integral Euler characteristic {val}")
    return int(val)


@dataclass(frozen=True)
class SurfaceInvariants:
    chi_O: int
    euler: int
    K2: int
    chi_antiK: int
    chi_T: int
    noether_ok: bool
    xiao_strict: bool
    b2_if_q0: int

    def as_tuple(self):
        return (self.chi_O, self.euler, self.K2, self.chi_antiK, self.chi_T)


def surface_invariants(S: Scene) -> SurfaceInvariants:
    if S.dim != 2:
        raise ValueError("surface invariants need a dim-2 scene")
    T = S.tangent
    cs = chern_classes(T, 2)
    c1, c2 = cs[1], cs[2]
    euler = S.integrate(c2)
    K2 = S.integrate(c1 * c1)
    if euler.denominator != 1 or K2.denominator != 1:
        raise ValueError("non-integral characteristic numbers")
    euler, K2 = int(euler), int(K2)
    from .bundle import trivial
    chi_O = chi_sheaf(S, trivial(S, 1))
    chi_antiK = chi_sheaf(S, det(T))
    chi_T = chi_sheaf(S, T)
    return SurfaceInvariants(
        chi_O=chi_O,
        euler=euler,
        K2=K2,
        chi_antiK=chi_antiK,
        chi_T=chi_T,
        noether_ok=(12 * chi_O == K2 + euler),
        xiao_strict=(3 * K2 < 8 * (chi_O - 2)),
        b2_if_q0=euler - 2,
    )


def nodal_cover_invariants(e_smooth: int, K2_smooth: int, nodes: int):
    """Numerics of a double cover branched over an even nodal set."""
    e_F = 2 * e_smooth - 3 * nodes
    K2_F = 2 * K2_smooth
    total = K2_F + e_F
    if total % 12:
        raise ValueError(f"K2 + e = {total} is not divisible by 12")
    return (e_F, K2_F, total // 12)
