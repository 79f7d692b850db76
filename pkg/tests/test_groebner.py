from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest
import sympy

from quadred.poly import (GREVLEX, LEX, QQ, BudgetExceeded, InfiniteDimensional,
                          Polynomial, RngState, groebner, parse_poly, prime_field,
                          quotient_dimension, random_homogeneous)

NAMES = ["x", "y", "z"]


def P(s, field=QQ, names=NAMES):
    return parse_poly(s, names, field)


def test_already_a_basis():
    gb = groebner([P("x - y"), P("y^2") - Fraction(1, 2)])
    lms = gb.leading_monomials()
    assert (1, 0, 0) in lms and (0, 2, 0) in lms
    assert len(gb) == 2
    # Reduced basis elements are monic.
    for g in gb:
        assert g.leading_coeff(gb.order) == 1


def test_unit_ideal():
    gb = groebner([P("x"), P("x + 1")])
    assert len(gb) == 1 and gb.polys[0].is_constant()
    assert quotient_dimension(gb) == 0


def _to_sympy(f, syms):
    total = 0
    for m, c in f.terms.items():
        t = sympy.Rational(c)
        for s, e in zip(syms, m):
            t *= s ** e
        total += t
    return total


def test_matches_sympy_groebner():
    syms = sympy.symbols("x y z")
    gens = [P("x^2 + y^2 + z^2 - 1"), P("x*y - z"), P("x - y^2")]
    ours = groebner(gens)
    theirs = sympy.groebner([_to_sympy(g, syms) for g in gens], *syms,
                            order="grevlex")
    ours_sym = sorted((sympy.expand(_to_sympy(g, syms)) for g in ours),
                      key=sympy.default_sort_key)
    theirs_sym = sorted((sympy.expand(g / sympy.LC(g, gens=syms, order="grevlex"))
                         for g in theirs.exprs), key=sympy.default_sort_key)
    assert len(ours_sym) == len(theirs_sym)
    for a, b in zip(ours_sym, theirs_sym):
        assert sympy.expand(a - b) == 0


def test_spolys_reduce_to_zero():
    # Buchberger criterion: the output must reduce all its own S-polynomials.
    Fp = prime_field(10007)
    rng = RngState(17)
    gens = [random_homogeneous(Fp, 3, 2, rng) for _ in range(3)]
    gb = groebner(gens)
    polys = gb.polys
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            mi = polys[i].leading_monomial()
            mj = polys[j].leading_monomial()
            lcm = tuple(max(a, b) for a, b in zip(mi, mj))
            ti = {tuple(l - a for l, a in zip(lcm, mi)): 1}
            tj = {tuple(l - a for l, a in zip(lcm, mj)): 1}
            s = (Polynomial._raw(Fp, 3, ti) * polys[i]
                 - Polynomial._raw(Fp, 3, tj) * polys[j])
            assert gb.normal_form(s).is_zero()


def test_normal_form_idempotent_and_linear():
    gens = [P("x^2 - y"), P("y^2 - z")]
    gb = groebner(gens)
    f = P("x^4 + x^2 + 1")
    nf = gb.normal_form(f)
    assert gb.normal_form(nf) == nf
    assert gb.normal_form(f - nf).is_zero()
    assert nf == P("z + y + 1")


def test_lex_elimination():
    # lex basis of a simple system exposes the eliminant in the last variable.
    gb = groebner([P("x + y + z - 1"), P("x - 2*y"), P("y - 3*z")], order=LEX)
    last = [g for g in gb if g.used_vars() == [2]]
    assert len(last) == 1
    assert last[0] == P("z") - Fraction(1, 10)


def test_budget_exceeded():
    Fp = prime_field(31991)
    rng = RngState(2)
    gens = [random_homogeneous(Fp, 4, 3, rng) for _ in range(4)]
    with pytest.raises(BudgetExceeded):
        groebner(gens, budget=50)


def _brute_quotient_dim(lms, bound=12):
    # Count standard monomials by scanning a box; the bound must exceed every
    # pure-power degree, which the callers arrange.
    nvars = len(lms[0])
    count = 0
    for m in product(range(bound), repeat=nvars):
        if not any(all(a >= b for a, b in zip(m, lm)) for lm in lms):
            count += 1
    return count


def test_quotient_dimension_brute_force():
    cases = [
        [P("x^2 - 1"), P("y^3 - x"), P("z - y")],
        [P("x^3"), P("y^2"), P("z^4"), P("x*y*z")],
        [P("x^2 + y^2 + z^2 - 1"), P("x*y - z"), P("x - y^2")],
    ]
    for gens in cases:
        gb = groebner(gens)
        dim = quotient_dimension(gb)
        assert dim == _brute_quotient_dim(gb.leading_monomials())


def test_quotient_dimension_infinite():
    with pytest.raises(InfiniteDimensional):
        quotient_dimension([P("x*y*z")])
    with pytest.raises(InfiniteDimensional):
        quotient_dimension([P("x^2"), P("y^2")])


def test_deterministic_output():
    Fp = prime_field(10007)
    gens1 = [random_homogeneous(Fp, 3, 2, RngState(9)) for _ in range(3)]
    gens2 = [random_homogeneous(Fp, 3, 2, RngState(9)) for _ in range(3)]
    gb1 = groebner(gens1)
    gb2 = groebner(gens2)
    assert [g.terms for g in gb1] == [g.terms for g in gb2]
