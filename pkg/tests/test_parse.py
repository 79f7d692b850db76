import pytest

from quadred.poly import QQ, ParseError, parse_poly, poly_to_string, prime_field

NAMES = ["x0", "x1", "x2"]


def test_basic_forms():
    f = parse_poly("x0^2 + 2*x0*x1 + x1^2", NAMES, QQ)
    assert f == parse_poly("(x0 + x1)^2", NAMES, QQ)
    g = parse_poly("3", NAMES, QQ)
    assert g.is_constant() and g.constant_value() == 3


def test_whitespace_insensitive():
    a = parse_poly("x0 ^ 2+  x1", NAMES, QQ)
    b = parse_poly("x0^2+x1", NAMES, QQ)
    assert a == b


def test_leading_minus():
    f = parse_poly("-x0 + x1", NAMES, QQ)
    assert f == parse_poly("x1 - x0", NAMES, QQ)


def test_parenthesized_exponent_rejected():
    with pytest.raises(ParseError):
        parse_poly("x0^(2)", NAMES, QQ)


def test_error_positions():
    with pytest.raises(ParseError) as e:
        parse_poly("x0 + ", NAMES, QQ)
    assert "position" in str(e.value)
    with pytest.raises(ParseError):
        parse_poly("x0 $ x1", NAMES, QQ)
    with pytest.raises(ParseError):
        parse_poly("w^2", NAMES, QQ)
    with pytest.raises(ParseError):
        parse_poly("(x0 + x1", NAMES, QQ)
    with pytest.raises(ParseError):
        parse_poly("x0 x1", NAMES, QQ)


def test_double_minus_rejected():
    with pytest.raises(ParseError):
        parse_poly("--x0", NAMES, QQ)
    with pytest.raises(ParseError):
        parse_poly("x0 + -x1", NAMES, QQ)


def test_huge_exponent_rejected():
    with pytest.raises(ParseError):
        parse_poly("x0^99999999", NAMES, QQ)


def test_round_trip_integer_polys():
    cases = [
        "x0^3 - 2*x0*x1*x2 + 7",
        "-5*x2^4 + x0",
        "0",
        "42",
        "x0*x1 + x0*x2 + x1*x2",
    ]
    for s in cases:
        f = parse_poly(s, NAMES, QQ)
        assert parse_poly(poly_to_string(f, NAMES), NAMES, QQ) == f


def test_round_trip_prime_field():
    Fp = prime_field(10007)
    f = parse_poly("x0^2 - x1", NAMES, Fp)
    s = poly_to_string(f, NAMES)
    # GF(p) coefficients serialize as representatives in 0..p-1.
    assert "10006" in s
    assert parse_poly(s, NAMES, Fp) == f


def test_serializer_orders_terms_grevlex_descending():
    f = parse_poly("1 + x0 + x2^2 + x0*x1", NAMES, QQ)
    assert poly_to_string(f, NAMES) == "x0*x1 + x2^2 + x0 + 1"
