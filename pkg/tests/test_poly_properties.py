"""Property-based checks of the polynomial ring axioms and division laws."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from quadred.poly import QQ, Polynomial, divide_exact, prime_field

FP = prime_field(10007)


def _poly(field, coeff_strategy):
    monos = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
    return st.dictionaries(monos, coeff_strategy, max_size=6).map(
        lambda d: Polynomial(field, 3, d))


qq_polys = _poly(QQ, st.fractions(min_value=-50, max_value=50, max_denominator=10))
fp_polys = _poly(FP, st.integers(0, 10006))


@settings(max_examples=60, deadline=None)
@given(qq_polys, qq_polys, qq_polys)
def test_ring_axioms_qq(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + Polynomial.zero(QQ, 3) == f
    assert f * Polynomial.constant(QQ, 3, 1) == f


@settings(max_examples=60, deadline=None)
@given(fp_polys, fp_polys, fp_polys)
def test_ring_axioms_fp(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f - f == Polynomial.zero(FP, 3)
    assert f * (g * h) == (f * g) * h


@settings(max_examples=60, deadline=None)
@given(qq_polys, qq_polys)
def test_exact_division_recovers_factor(f, g):
    if g.is_zero():
        return
    assert divide_exact(f * g, g) == f


@settings(max_examples=60, deadline=None)
@given(fp_polys)
def test_substitution_identity(f):
    x = Polynomial.variable(FP, 3, 0)
    y = Polynomial.variable(FP, 3, 1)
    z = Polynomial.variable(FP, 3, 2)
    assert f.substitute({0: x, 1: y, 2: z}) == f


@settings(max_examples=40, deadline=None)
@given(qq_polys, qq_polys)
def test_diff_is_a_derivation(f, g):
    for i in range(3):
        lhs = (f * g).diff(i)
        rhs = f.diff(i) * g + f * g.diff(i)
        assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(qq_polys)
def test_term_iteration_canonical_order(f):
    from quadred.poly.order import _grevlex_key
    keys = [_grevlex_key(m) for m in f.terms]
    assert all(a > b for a, b in zip(keys, keys[1:]))
