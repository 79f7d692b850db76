"""Graded power-series arithmetic on lists of homogeneous components.

A "series" here is a list indexed by weighted degree whose entries are
Polynomial values; entry 0 is the constant part.  All routines take a `mul`
callback so the caller decides how products are normalized (typically normal
form modulo the ring relations).
"""

from fractions import Fraction
from math import factorial

from ..poly import Polynomial


def weighted_components(poly: Polynomial, weights, up_to: int):
    """Split into homogeneous components [deg 0, ..., deg up_to] by weight."""
    comps = [{} for _ in range(up_to + 1)]
    for m, c in poly.terms.items():
        d = sum(e * w for e, w in zip(m, weights))
        if 0 <= d <= up_to:
            comps[d][m] = c
    return [Polynomial._raw(poly.field, poly.nvars, t) for t in comps]


def series_mul(a, b, up_to, mul):
    out = []
    for k in range(up_to + 1):
        acc = None
        for i in range(k + 1):
            if i >= len(a) or k - i >= len(b):
                continue
            if a[i].is_zero() or b[k - i].is_zero():
                continue
            term = mul(a[i], b[k - i])
            acc = term if acc is None else acc + term
        out.append(acc if acc is not None else _zero_like(a, b))
    return out


def _zero_like(a, b):
    probe = a[0] if a else b[0]
    return Polynomial.zero(probe.field, probe.nvars)


def series_inverse(a, up_to, mul):
    """Inverse of a series with invertible constant part."""
    c0 = a[0].constant_value()
    if c0 == 0:
        raise ValueError("series has no inverse")
    inv0 = Fraction(1) / Fraction(c0) if a[0].field.p is None else a[0].field.inv(c0)
    out = [a[0] * 0 + inv0]
    zero = a[0] * 0
    for k in range(1, up_to + 1):
        acc = zero
        for i in range(1, k + 1):
            if i < len(a) and not a[i].is_zero() and not out[k - i].is_zero():
                acc = acc + mul(a[i], out[k - i])
        out.append(acc * (-inv0))
    return out


def chern_from_character(ch, up_to, mul):
    """Total Chern class components e_0..e_up_to from character components.

    Newton's identities with power sums p_m = m! * ch_m.
    """
    p = [ch[m] * factorial(m) if m < len(ch) else ch[0] * 0
         for m in range(up_to + 1)]
    zero = ch[0] * 0
    e = [zero + Fraction(1)]
    for k in range(1, up_to + 1):
        acc = zero
        sign = 1
        for i in range(1, k + 1):
            if not e[k - i].is_zero() and not p[i].is_zero():
                term = mul(e[k - i], p[i])
                acc = acc + term * sign
            sign = -sign
        e.append(acc * Fraction(1, k))
    return e


def character_from_chern(e, rank, up_to, mul):
    """Character components ch_0..ch_up_to from Chern classes e_1..e_r."""
    zero = e[0] * 0 if e else None
    p = [zero]
    for k in range(1, up_to + 1):
        acc = zero
        sign = 1
        for i in range(1, k):
            if i < len(e) and not e[i].is_zero() and not p[k - i].is_zero():
                acc = acc + mul(e[i], p[k - i]) * sign
            sign = -sign
        if k < len(e) and not e[k].is_zero():
            acc = acc + e[k] * (sign * k)
        p.append(acc)
    ch = [zero + Fraction(rank)]
    for m in range(1, up_to + 1):
        ch.append(p[m] * Fraction(1, factorial(m)))
    return ch
