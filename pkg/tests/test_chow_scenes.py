"""Scene constructors: products, flag towers, zero loci.

Euler numbers of the classical homogeneous spaces make good smoke values
because they count fixed points of a torus action, which is independent
combinatorics: n+1 for P^n, binomial(4,2)=6 for Gr(2,4), multinomials for
flag varieties.
"""

from fractions import Fraction

import pytest

from quadred.chow import (c_top, chern_classes, chi_sheaf, dual, flag_bundle,
                          grassmannian_2_4, integral, line_bundle, point,
                          product, projective_space, pullback, pullback_class,
                          quadric_threefold, scene, section_zero_locus, sigma1,
                          tensor, trivial)


def euler(X):
    return integral(X, c_top(X.tangent))


def test_point_scene():
    pt = point()
    assert pt.dim == 0
    assert pt.integrate(pt.ring.const(5)) == 5
    assert pt.tangent.rank == 0


def test_projective_spaces():
    for n in (1, 2, 3, 4):
        P = projective_space(n)
        assert P.dim == n
        assert euler(P) == n + 1
        h = P.ring.gen(0)
        assert integral(P, h ** n) == 1
        assert integral(P, h ** (n - 1)) == 0


def test_projective_space_rejects_n0():
    with pytest.raises(ValueError):
        projective_space(0)


def test_product_scene():
    P1 = projective_space(1, var="a")
    P2 = projective_space(2, var="b")
    X = product(P1, P2)
    assert X.dim == 3
    assert euler(X) == 6
    a = X.ring.gen_by_name("a")
    b = X.ring.gen_by_name("b")
    assert integral(X, a * b ** 2) == 1
    assert integral(X, a ** 2 * b) == 0


def test_product_requires_distinct_names():
    with pytest.raises(ValueError):
        product(projective_space(1), projective_space(2))


def test_grassmannian():
    G = grassmannian_2_4()
    assert G.dim == 4
    assert euler(G) == 6
    s1 = sigma1(G)
    assert integral(G, s1 ** 4) == 2
    U = G.registry["B1"]
    Q = G.registry["B2"]
    assert U.rank == 2 and Q.rank == 2
    # U -> E -> Q with trivial E of rank 4
    assert (U + Q).ch == G.ring.const(4)
    # the class of a point integrates to 1
    assert G.ring.integral_raw(G.ring.reduce(G.ring.point_poly)) == 1


def test_grassmannian_is_cached():
    assert grassmannian_2_4() is grassmannian_2_4()


def test_tautological_sub_is_globally_generated_dual():
    # Borel-Weil on Gr(2,4): H^0(U^dual) is the ambient C^4
    G = grassmannian_2_4()
    assert chi_sheaf(G, dual(G.registry["B1"])) == 4


def test_flag_tower_dimensions():
    pt = point()
    fl = flag_bundle(pt, trivial(pt, 5), [1, 1, 3])
    # dim = sum of products of distinct block ranks
    assert fl.dim == 1 * 1 + 1 * 3 + 1 * 3
    assert euler(fl) == 20


def test_full_flag_threefold():
    pt = point()
    fl = flag_bundle(pt, trivial(pt, 3), [1, 1, 1])
    assert fl.dim == 3
    assert euler(fl) == 6


def test_flag_over_positive_dimensional_base():
    P3 = projective_space(3)
    h = P3.ring.gen(0)
    E = line_bundle(P3, -h) + trivial(P3, 3)
    fl = flag_bundle(P3, E, [1, 2, 1])
    assert fl.dim == 8
    assert fl.registry["E"].rank == 4
    assert fl.registry["B1"].rank == 1
    assert fl.registry["B2"].rank == 2
    assert fl.registry["B3"].rank == 1
    assert fl.registry["U1"].rank == 1
    assert fl.registry["U3"].rank == 3
    # the graded pieces reassemble the pullback of E
    total = fl.registry["B1"] + fl.registry["B2"] + fl.registry["B3"]
    assert total.ch == fl.registry["E"].ch
    # relative fibers are Fl(1,2,4), absolute Euler number multiplies
    assert euler(fl) == 4 * 12


def test_projective_bundle_as_flag():
    # P(E) for E = O + O + O on P1 is P1 x P2
    P1 = projective_space(1)
    fl = flag_bundle(P1, trivial(P1, 3), [1, 2])
    assert fl.dim == 3
    assert euler(fl) == 6


def test_pullback_along_tower():
    # P(O + O) over P3 is P3 x P1
    P3 = projective_space(3)
    fl = flag_bundle(P3, trivial(P3, 2), [1, 1])
    h = P3.ring.gen(0)
    t = -chern_classes(fl.registry["B1"], 1)[1]
    assert integral(fl, pullback_class(fl, h ** 3) * t) == 1
    assert integral(fl, pullback_class(fl, h ** 2) * t) == 0
    O1 = pullback(fl, P3.registry["O(1)"])
    assert O1.rank == 1
    assert integral(fl, chern_classes(O1, 1)[1] ** 4) == 0


def test_pullback_requires_extension():
    P3 = projective_space(3)
    P2 = projective_space(2, var="k")
    with pytest.raises(ValueError):
        pullback_class(P2, P3.ring.gen(0))


def test_quadric_threefold():
    Q = quadric_threefold()
    assert Q.dim == 3
    assert euler(Q) == 4
    # degree of the quadric under the hyperplane class
    assert integral(Q, sigma1(Q) ** 3) == 2


def test_quintic_surface_euler():
    P3 = projective_space(3)
    h = P3.ring.gen(0)
    S = section_zero_locus(P3, line_bundle(P3, h * 5))
    assert S.dim == 2
    assert euler(S) == 55


def test_hypersurface_degrees_in_product():
    # Z(O(1,1)) inside P2 x P2 is the full flag threefold, Euler number 6
    A = projective_space(2, var="u")
    B = projective_space(2, var="v")
    X = product(A, B)
    u = X.ring.gen_by_name("u")
    v = X.ring.gen_by_name("v")
    F = section_zero_locus(X, line_bundle(X, u + v))
    assert F.dim == 3
    assert euler(F) == 6


def test_zero_locus_rank_bounds():
    P2 = projective_space(2)
    h = P2.ring.gen(0)
    with pytest.raises(ValueError):
        section_zero_locus(P2, trivial(P2, 0))
    with pytest.raises(ValueError):
        section_zero_locus(P2, trivial(P2, 3))


def test_zero_locus_measure_composes():
    # cutting twice by O(1) in P3 equals the measure of a line
    P3 = projective_space(3)
    O1 = P3.registry["O(1)"]
    L1 = section_zero_locus(P3, O1)
    O1_L = pullback(L1, O1)
    L2 = section_zero_locus(L1, O1_L)
    assert L2.dim == 1
    assert euler(L2) == 2
    h = L2.ring.gen(0)
    assert integral(L2, h) == 1


def test_scene_lookup_rejects_unknown():
    with pytest.raises(ValueError):
        scene("NOT_A_SCENE")
