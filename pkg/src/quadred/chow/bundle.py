"""Bundle classes: rank plus Chern character, with the standard calculus."""

from fractions import Fraction
from math import comb

from .ring import ChowClass
from .series import character_from_chern, chern_from_character


class BundleClass:
    """A (possibly virtual) bundle on a scene, tracked by rank and character."""

    __slots__ = ("scene", "rank", "ch")

    def __init__(self, scene, rank: int, ch: ChowClass):
        if ch.ring is not scene.ring:
            raise ValueError("character lives in a different ring")
        if ch.constant_part() != rank:
            raise ValueError("character degree-0 part disagrees with rank")
        self.scene = scene
        self.rank = rank
        self.ch = ch

    def __add__(self, other):
        self._check(other)
        return BundleClass(self.scene, self.rank + other.rank, self.ch + other.ch)

    def __sub__(self, other):
        self._check(other)
        return BundleClass(self.scene, self.rank - other.rank, self.ch - other.ch)

    def _check(self, other):
        if not isinstance(other, BundleClass):
            raise TypeError("expected a BundleClass")
        if other.ch.ring is not self.ch.ring:
            raise ValueError("bundles on different rings")

    def __eq__(self, other):
        return (isinstance(other, BundleClass) and self.rank == other.rank
                and self.ch == other.ch)

    def __hash__(self):
        return hash((self.rank, self.ch))

    def __repr__(self):
        return f"BundleClass(rank {self.rank}, ch {self.ch!r})"


def exp_class(c: ChowClass) -> ChowClass:
    out = c.ring.const(1)
    term = c.ring.const(1)
    for k in range(1, c.ring.dim + 1):
        term = term * c * Fraction(1, k)
        if term.is_zero():
            break
        out = out + term
    return out


def trivial(scene, rank: int) -> BundleClass:
    return BundleClass(scene, rank, scene.ring.const(rank))


def line_bundle(scene, c1: ChowClass) -> BundleClass:
    return BundleClass(scene, 1, exp_class(c1))


def dual(B: BundleClass) -> BundleClass:
    ring = B.ch.ring
    acc = ring.zero()
    for k, comp in enumerate(B.ch.components()):
        acc = acc + (comp if k % 2 == 0 else -comp)
    return BundleClass(B.scene, B.rank, acc)


def tensor(A: BundleClass, B: BundleClass) -> BundleClass:
    A._check(B)
    return BundleClass(A.scene, A.rank * B.rank, A.ch * B.ch)


def twist(B: BundleClass, line: BundleClass) -> BundleClass:
    if line.rank != 1:
        raise ValueError("twist expects a line bundle")
    return tensor(B, line)


def adams(B: BundleClass, i: int) -> BundleClass:
    ring = B.ch.ring
    acc = ring.zero()
    for k, comp in enumerate(B.ch.components()):
        acc = acc + comp * Fraction(i ** k)
    return BundleClass(B.scene, B.rank, acc)


def wedge(B: BundleClass, k: int) -> BundleClass:
    if B.rank < 0:
        raise ValueError("wedge of a negative-rank virtual bundle")
    if k < 0:
        raise ValueError("negative exterior power")
    ring = B.ch.ring
    chs = [ring.const(1)]
    for j in range(1, k + 1):
        acc = ring.zero()
        sign = 1
        for i in range(1, j + 1):
            acc = acc + adams(B, i).ch * chs[j - i] * Fraction(sign)
            sign = -sign
        chs.append(acc * Fraction(1, j))
    return BundleClass(B.scene, comb(B.rank, k) if k <= B.rank else 0, chs[k])


def sym(B: BundleClass, k: int) -> BundleClass:
    if B.rank < 0:
        raise ValueError("symmetric power of a negative-rank virtual bundle")
    if k < 0:
        raise ValueError("negative symmetric power")
    ring = B.ch.ring
    chs = [ring.const(1)]
    for j in range(1, k + 1):
        acc = ring.zero()
        for i in range(1, j + 1):
            acc = acc + adams(B, i).ch * chs[j - i]
        chs.append(acc * Fraction(1, j))
    return BundleClass(B.scene, comb(B.rank + k - 1, k), chs[k])


def det(B: BundleClass) -> BundleClass:
    return line_bundle(B.scene, B.ch.component(1))


def bundle_from_sequence(middle_terms, sub_terms) -> BundleClass:
    """Alternating-sum bundle of an exact sequence: sum(middle) - sum(sub)."""
    if not middle_terms:
        raise ValueError("no middle terms")
    acc = middle_terms[0]
    for t in middle_terms[1:]:
        acc = acc + t
    for t in sub_terms:
        acc = acc - t
    return acc


def chern_classes(B: BundleClass, up_to=None):
    """Total Chern class components [c_0, c_1, ...] as ChowClass values."""
    ring = B.ch.ring
    if up_to is None:
        up_to = ring.dim
    comps = B.ch.components(up_to)
    return chern_from_character(comps, up_to, lambda a, b: a * b)


def c_top(B: BundleClass) -> ChowClass:
    if B.rank < 0:
        raise ValueError("no top Chern class for negative rank")
    if B.rank > B.ch.ring.dim:
        return B.ch.ring.zero()
    return chern_classes(B, B.rank)[B.rank]


def bundle_from_chern(scene, rank: int, cs) -> BundleClass:
    """BundleClass from total Chern class components [c_0=1, c_1, ...]."""
    ring = scene.ring
    comps = character_from_chern(list(cs), rank, ring.dim, lambda a, b: a * b)
    acc = ring.zero()
    for c in comps:
        acc = acc + c
    return BundleClass(scene, rank, acc)
