from __future__ import annotations

from fractions import Fraction
from itertools import product

from quadred.poly import (QQ, RngState, groebner, kernel_basis, parse_poly,
                          prime_field, rational_points, rref, solve_linear,
                          standard_monomials, univariate_roots)


def test_univariate_roots_brute_force():
    p = 101
    rng = RngState(4)
    for _ in range(20):
        deg = 1 + rng.next() % 5
        coeffs = [rng.next() % p for _ in range(deg)] + [1 + rng.next() % (p - 1)]
        expected = sorted(a for a in range(p)
                          if sum(c * pow(a, i, p) for i, c in enumerate(coeffs)) % p == 0)
        assert univariate_roots(coeffs, p) == expected


def test_univariate_roots_full_split():
    # (x-1)(x-2)(x-3) over a larger prime.
    p = 10007
    coeffs = [-6 % p, 11, -6 % p, 1]
    assert univariate_roots(coeffs, p) == [1, 2, 3]


def test_rref_and_kernel_over_qq():
    rows = [[Fraction(1), Fraction(2), Fraction(3)],
            [Fraction(2), Fraction(4), Fraction(6)],
            [Fraction(0), Fraction(1), Fraction(1)]]
    red, pivots = rref(rows, 3)
    assert pivots == [0, 1]
    ker = kernel_basis(rows, 3)
    assert len(ker) == 1
    v = ker[0]
    for row in rows:
        assert sum(a * b for a, b in zip(row, v)) == 0


def test_kernel_over_prime_field():
    p = 10007
    rows = [[1, 1, 0], [0, 1, 1]]
    ker = kernel_basis(rows, 3, p)
    assert len(ker) == 1
    v = ker[0]
    for row in rows:
        assert sum(a * b for a, b in zip(row, v)) % p == 0


def test_solve_linear():
    p = 10007
    rows = [[1, 2], [3, 4]]
    rhs = [5, 6]
    x = solve_linear(rows, rhs, p)
    for row, b in zip(rows, rhs):
        assert sum(a * v for a, v in zip(row, x)) % p == b % p
    # Inconsistent system.
    assert solve_linear([[1, 1], [1, 1]], [0, 1], p) is None
    # Underdetermined: free variables pinned to zero.
    x = solve_linear([[0, 1]], [7], p)
    assert x == [0, 7]


def test_standard_monomials():
    names = ["x", "y"]
    gens = [parse_poly(s, names, prime_field(101)) for s in ("x^2 - 1", "y^3 - y")]
    gb = groebner(gens)
    basis = standard_monomials(gb, 2)
    assert len(basis) == 6
    assert (0, 0) in basis and (1, 2) in basis


def test_rational_points_brute_force():
    p = 31
    F = prime_field(p)
    names = ["x", "y", "z"]
    systems = [
        ["x^2 - 1", "y - x", "z - x*y"],
        ["x^3 - x", "y^2 - x^2", "z - 1"],
        ["x^2 + 1", "y - x", "z"],
    ]
    for strs in systems:
        gens = [parse_poly(s, names, F) for s in strs]
        expected = sorted(pt for pt in product(range(p), repeat=3)
                          if all(g.evaluate(list(pt)) == 0 for g in gens))
        assert rational_points(gens) == expected


def test_rational_points_empty_and_origin():
    F = prime_field(101)
    names = ["x", "y"]
    gens = [parse_poly("x", names, F), parse_poly("y", names, F)]
    assert rational_points(gens) == [(0, 0)]
    gens = [parse_poly("x^2 + x + 1", names, F), parse_poly("y", names, F)]
    # x^2 + x + 1 has roots mod 101 only if 101 = 1 mod 3; 101 mod 3 = 2.
    assert rational_points(gens) == []
