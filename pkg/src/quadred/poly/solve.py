"""Solving tools: dense univariate arithmetic over prime fields, root
isolation, exact linear algebra, and rational-point enumeration for
zero-dimensional ideals.
"""

from fractions import Fraction
from itertools import product

from .core import Polynomial
from .groebner import DEFAULT_BUDGET, GroebnerBasis, _divides, groebner
from .order import GREVLEX
from .rng import RngState

_MASK = (1 << 64) - 1


# ---- dense univariate arithmetic over GF(p); coefficient lists low-to-high ----

def _uni_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _uni_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _uni_trim(out)


def _uni_rem(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    while len(a) - 1 >= db and a:
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * inv % p
        shift = len(a) - 1 - db
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        _uni_trim(a)
    return a


def _uni_gcd(a, b, p):
    a, b = _uni_trim(list(a)), _uni_trim(list(b))
    while b:
        a, b = b, _uni_rem(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [x * inv % p for x in a]
    return a


def _uni_powmod_x(e, m, p):
    """x**e mod m (m of degree >= 1)."""
    result = [1]
    base = _uni_rem([0, 1], m, p)
    while e:
        if e & 1:
            result = _uni_rem(_uni_mul(result, base, p), m, p)
        base = _uni_rem(_uni_mul(base, base, p), m, p)
        e >>= 1
    return result


def _uni_powmod(a, e, m, p):
    result = [1]
    base = _uni_rem(list(a), m, p)
    while e:
        if e & 1:
            result = _uni_rem(_uni_mul(result, base, p), m, p)
        base = _uni_rem(_uni_mul(base, base, p), m, p)
        e >>= 1
    return result


def univariate_roots(coeffs, p, rng=None):
    """All roots in GF(p) of the polynomial with the given dense coefficient
    list (constant term first).  Returned sorted ascending."""
    f = _uni_trim([c % p for c in coeffs])
    if not f:
        raise ValueError("the zero polynomial has every root")
    if len(f) == 1:
        return []
    if rng is None:
        seed = 0
        for c in f:
            seed = (seed * 1099511628211 + c + 1) & _MASK
        rng = RngState(seed)
    # Distinct degree-1 part: gcd(x^p - x, f).
    xp = _uni_powmod_x(p, f, p)
    xp_minus_x = list(xp)
    while len(xp_minus_x) < 2:
        xp_minus_x.append(0)
    xp_minus_x[1] = (xp_minus_x[1] - 1) % p
    g = _uni_gcd(f, _uni_trim(xp_minus_x), p)
    roots = []
    _split_linear(g, p, rng, roots)
    return sorted(roots)


def _split_linear(g, p, rng, out):
    """Equal-degree splitting of a monic product of distinct linear factors."""
    d = len(g) - 1
    if d <= 0:
        return
    if d == 1:
        out.append((-g[0]) % p)
        return
    half = (p - 1) // 2
    while True:
        a = rng.next() % p
        h = _uni_powmod([a, 1], half, g, p)
        h = _uni_trim(list(h))
        if h:
            h[0] = (h[0] - 1) % p
        else:
            h = [p - 1]
        w = _uni_gcd(g, _uni_trim(h), p)
        if 0 < len(w) - 1 < d:
            break
    _split_linear(w, p, rng, out)
    q = _uni_quotient(g, w, p)
    _split_linear(q, p, rng, out)


def _uni_quotient(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    q = [0] * (len(a) - db)
    while len(a) - 1 >= db and a:
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * inv % p
        shift = len(a) - 1 - db
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        _uni_trim(a)
    return _uni_trim(q)


# ---- exact dense linear algebra over GF(p) or QQ ----

def _inv_scalar(c, p):
    return pow(c, p - 2, p) if p is not None else 1 / c


def rref(rows, ncols, p=None):
    """Reduced row echelon form in place semantics (a copy is returned).

    Returns (reduced rows, pivot column list).
    """
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = _inv_scalar(rows[r][col], p)
        if p is None:
            rows[r] = [x * inv for x in rows[r]]
        else:
            rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                c = rows[i][col]
                if p is None:
                    rows[i] = [x - c * y for x, y in zip(rows[i], rows[r])]
                else:
                    rows[i] = [(x - c * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def kernel_basis(rows, ncols, p=None):
    """Basis of the right kernel of the matrix (rows over GF(p) or QQ)."""
    red, pivots = rref(rows, ncols, p)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    zero = 0 if p is not None else Fraction(0)
    one = 1 if p is not None else Fraction(1)
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            val = -red[r][fc]
            if p is not None:
                val %= p
            v[pc] = val
        basis.append(v)
    return basis


def solve_linear(rows, rhs, p=None):
    """One exact solution of rows * x = rhs with free variables set to zero,
    or None if the system is inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1, p)
    if ncols in pivots:
        return None
    zero = 0 if p is not None else Fraction(0)
    x = [zero] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x


# ---- rational points of zero-dimensional ideals over GF(p) ----

def standard_monomials(gb: GroebnerBasis, nvars: int):
    """Monomial basis of the quotient, smallest first; the staircase must be
    finite."""
    lms = gb.leading_monomials()
    if any(sum(m) == 0 for m in lms):
        return []
    bounds = []
    for i in range(nvars):
        pure = [m[i] for m in lms if sum(m) == m[i] and m[i] > 0]
        if not pure:
            raise ValueError("quotient is not finite-dimensional")
        bounds.append(min(pure))
    out = []
    for m in product(*(range(b) for b in bounds)):
        if not any(_divides(lm, m) for lm in lms):
            out.append(m)
    out.sort(key=GREVLEX.key)
    return out


def _minimal_polynomial(gb: GroebnerBasis, basis, var, field, budget):
    """Minimal polynomial of multiplication by x_var on the cyclic subspace
    generated by 1, as a dense coefficient list over GF(p)."""
    p = field.p
    nvars = gb.polys[0].nvars
    index = {m: i for i, m in enumerate(basis)}
    dim = len(basis)
    # Column j: normal form of x_var * basis[j], as a vector.
    cols = []
    for m in basis:
        m2 = tuple(e + 1 if i == var else e for i, e in enumerate(m))
        if m2 in index:
            col = {index[m2]: 1}
        else:
            nf = gb.normal_form(Polynomial._raw(field, nvars, {m2: 1}), budget=budget)
            col = {index[mm]: c for mm, c in nf.terms.items()}
        cols.append(col)

    def apply(v):
        out = [0] * dim
        for j, c in enumerate(v):
            if not c:
                continue
            for i, a in cols[j].items():
                out[i] = (out[i] + c * a) % p
        return out

    one_mono = (0,) * nvars
    v = [0] * dim
    v[index[one_mono]] = 1
    rows = []  # (pivot, reduced vector, combination over powers)
    k = 0
    while True:
        vec = list(v)
        comb = [0] * k + [1]
        for piv, rvec, rcomb in rows:
            c = vec[piv]
            if c:
                vec = [(x - c * y) % p for x, y in zip(vec, rvec)]
                rc = rcomb + [0] * (len(comb) - len(rcomb))
                comb = [(x - c * y) % p for x, y in zip(comb, rc)]
        piv = next((i for i, x in enumerate(vec) if x), None)
        if piv is None:
            return comb
        inv = pow(vec[piv], p - 2, p)
        vec = [x * inv % p for x in vec]
        comb = [x * inv % p for x in comb]
        rows.append((piv, vec, comb))
        v = apply(v)
        k += 1
        if k > dim:
            raise RuntimeError("minimal polynomial search exceeded dimension")


def rational_points(gens, order=GREVLEX, budget=DEFAULT_BUDGET):
    """All GF(p)-rational points of the affine variety of a zero-dimensional
    ideal.  Returns sorted coordinate tuples."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("expected a nonzero ideal")
    field = gens[0].field
    if field.p is None:
        raise ValueError("point enumeration works over prime fields")
    nvars = gens[0].nvars
    pts = _points_rec(gens, field, nvars, order, budget)
    return sorted(pts)


def _points_rec(gens, field, nvars, order, budget):
    gens = [g for g in gens if not g.is_zero()]
    if nvars == 0:
        return [] if gens else [()]
    if any(g.is_constant() for g in gens):
        return []
    if not gens:
        raise ValueError("zero ideal has infinitely many points")
    gb = groebner(gens, order, budget)
    if gb.polys and gb.polys[0].is_constant():
        return []
    basis = standard_monomials(gb, nvars)
    var = nvars - 1
    minpoly = _minimal_polynomial(gb, basis, var, field, budget)
    roots = univariate_roots(minpoly, field.p)
    out = []
    for r in roots:
        reduced = []
        for g in gb.polys:
            h = g.substitute({var: r})
            if h.is_zero():
                continue
            reduced.append(h.drop_var(var))
        if not reduced and var > 0:
            # A vanished slice ideal in >= 1 remaining variables would be an
            # infinite set; the caller promised a finite staircase.
            raise RuntimeError("unexpected zero slice ideal")
        for sub in _points_rec(reduced, field, var, order, budget):
            out.append(sub + (r,))
    return out
