from __future__ import annotations

from fractions import Fraction

import pytest
import sympy

from quadred.poly import (QQ, Polynomial, RngState, arith, determinant,
                          divide_exact, jacobian, parse_poly, poly_to_string,
                          prime_field, random_homogeneous)

NAMES = ["x", "y", "z"]


def P(s, field=QQ):
    return parse_poly(s, NAMES, field)


def test_construction_prunes_and_sorts():
    f = Polynomial(QQ, 3, {(1, 0, 0): Fraction(1), (0, 0, 0): Fraction(0)})
    assert list(f.terms) == [(1, 0, 0)]
    g = Polynomial(QQ, 3, {(0, 0, 0): 1, (2, 0, 0): 1, (1, 1, 0): 1})
    assert list(g.terms) == [(2, 0, 0), (1, 1, 0), (0, 0, 0)]


def test_arith_dispatch():
    f, g = P("x + 1"), P("x - 1")
    assert arith(f, g, "add") == P("2*x")
    assert arith(f, g, "sub") == P("2")
    assert arith(f, g, "mul") == P("x^2 - 1")
    with pytest.raises(ValueError):
        arith(f, g, "div")


def test_pow_and_neg():
    f = P("x + y")
    assert f ** 3 == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3")
    assert f ** 0 == P("1")
    assert -f + f == P("0")
    with pytest.raises(ValueError):
        f ** -1


def test_substitute_simultaneous():
    f = P("x*y")
    # Simultaneous substitution x->y, y->x must swap, not cascade.
    g = f.substitute({0: P("y"), 1: P("x")})
    assert g == P("x*y")
    h = P("x^2 + y").substitute({0: P("y + 1")})
    assert h == P("y^2 + 3*y + 1")
    # Scalar substitution.
    assert P("x^2 + y").substitute({0: 2}) == P("y + 4")


def test_diff_and_jacobian():
    f = P("x^3*y + z^2")
    assert f.diff(0) == P("3*x^2*y")
    assert f.diff(2) == P("2*z")
    assert jacobian(f) == [P("3*x^2*y"), P("x^3"), P("2*z")]


def test_homogeneous():
    assert P("x^2 + y*z").is_homogeneous() == (True, 2)
    assert P("x^2 + y").is_homogeneous() == (False, None)
    # Weighted: x has weight 2, so x + y^2 becomes homogeneous.
    assert P("x + y^2").is_homogeneous(weights=[2, 1, 1]) == (True, 2)
    assert P("0").is_homogeneous() == (True, 0)


def test_evaluate():
    f = P("x^2*y - 3*z")
    assert f.evaluate([Fraction(2), Fraction(3), Fraction(1)]) == Fraction(9)
    Fp = prime_field(10007)
    g = P("x^2*y - 3*z", Fp)
    assert g.evaluate([2, 3, 1]) == 9


def test_divide_exact():
    f = P("x^2 - y^2")
    g = P("x - y")
    assert divide_exact(f, g) == P("x + y")
    with pytest.raises(ValueError):
        divide_exact(P("x^2 + y"), g)


def _to_sympy(f, syms):
    total = 0
    for m, c in f.terms.items():
        t = sympy.Rational(c)
        for s, e in zip(syms, m):
            t *= s ** e
        total += t
    return sympy.expand(total)


def test_determinant_against_sympy():
    rng = RngState(11)
    Fp = prime_field(10007)
    n = 4
    M = [[random_homogeneous(Fp, 3, 1, rng) for _ in range(n)] for _ in range(n)]
    d_cof = determinant(M, "cofactor")
    d_bar = determinant(M, "bareiss")
    assert d_cof == d_bar

    syms = sympy.symbols("x y z")
    SM = sympy.Matrix([[_to_sympy(e, syms) for e in row] for row in M])
    expected = sympy.expand(SM.det())
    got = _to_sympy(d_cof, syms)
    # Compare mod p since the entries live in GF(p).
    diff = sympy.expand(expected - got)
    for coeff in sympy.Poly(diff, *syms).coeffs() if diff != 0 else []:
        assert coeff % 10007 == 0


def test_determinant_multiplicative():
    rng = RngState(5)
    Fp = prime_field(31991)
    A = [[random_homogeneous(Fp, 2, 1, rng) for _ in range(3)] for _ in range(3)]
    B = [[random_homogeneous(Fp, 2, 1, rng) for _ in range(3)] for _ in range(3)]
    AB = [[sum((A[i][k] * B[k][j] for k in range(3)),
               Polynomial.zero(Fp, 2)) for j in range(3)] for i in range(3)]
    assert determinant(AB) == determinant(A) * determinant(B)


def test_determinant_singular():
    row = [P("x"), P("y"), P("z")]
    M = [row, row, [P("1"), P("0"), P("0")]]
    assert determinant(M, "cofactor") == P("0")
    assert determinant(M, "bareiss") == P("0")


def test_poly_to_string_rules():
    assert poly_to_string(P("0"), NAMES) == "0"
    assert poly_to_string(P("-x + 2"), NAMES) == "-x + 2"
    assert poly_to_string(P("y^2 - x"), NAMES) == "y^2 - x"
    with pytest.raises(ValueError):
        poly_to_string(P("x") * Fraction(1, 2), NAMES)
