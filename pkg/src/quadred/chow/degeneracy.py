"""Expected class of the corank-r locus of a general symmetric bundle map."""

from fractions import Fraction

from .bundle import BundleClass, chern_classes, dual, exp_class
from .ring import ChowClass
from .scene import Scene


def _class_det(M):
    n = len(M)
    if n == 1:
        return M[0][0]
    acc = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * _class_det(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    return acc


def symmetric_degeneracy_class(E: BundleClass, L: BundleClass, r: int) -> ChowClass:
    """Class of the corank-r degeneracy locus of a general symmetric map
    E^v -> E (x) L, as 2^r times a determinant in the Chern classes of the
    half-twisted bundle E^v (x) L^(1/2)."""
    if L.rank != 1:
        raise ValueError("twisting bundle must be a line bundle")
    if r < 1 or r > E.rank:
        raise ValueError("corank out of range")
    ring = E.ch.ring
    half = L.ch.component(1) * Fraction(1, 2)
    F = BundleClass(E.scene, E.rank, dual(E).ch * exp_class(half))
    need = 2 * r - 1
    cs = chern_classes(F, min(need, ring.dim))
    zero = ring.zero()

    def c(i):
        if i < 0:
            return zero
        if i > ring.dim:
            return zero
        return cs[i] if i < len(cs) else zero

    M = [[c(r + 1 - 2 * (i + 1) + (j + 1)) for j in range(r)] for i in range(r)]
    return _class_det(M) * Fraction(2 ** r)


def symmetric_degeneracy_count(X: Scene, E: BundleClass, L: BundleClass,
                               r: int, polarization: ChowClass, power: int) -> int:
    if r * (r + 1) // 2 + power != X.dim:
        raise ValueError("degeneracy codimension does not match the dimension")
    D = symmetric_degeneracy_class(E, L, r)
    val = X.integrate(D * polarization ** power)
    if val.denominator != 1:
        raise ValueError(f"non-integral degeneracy count {val}")
    return int(val)
