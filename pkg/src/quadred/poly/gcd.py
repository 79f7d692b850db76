"""Multivariate gcd via the primitive pseudo-remainder sequence."""

from .core import Polynomial, divide_exact
from .rng import RngState


def _deg_in(f, v):
    return max((m[v] for m in f.terms), default=-1)


def _as_univariate(f, v):
    """View f as a map (exponent of x_v) -> coefficient Polynomial."""
    coeffs = {}
    for m, c in f.terms.items():
        e = m[v]
        key = m[:v] + (0,) + m[v + 1:]
        cur = coeffs.get(e)
        add = Polynomial._raw(f.field, f.nvars, {key: c})
        coeffs[e] = add if cur is None else cur + add
    return {e: c for e, c in coeffs.items() if not c.is_zero()}


def _from_univariate(coeffs, v, field, nvars):
    acc = Polynomial.zero(field, nvars)
    for e, c in coeffs.items():
        shift = Polynomial._raw(field, nvars,
                                {tuple(e if j == v else 0 for j in range(nvars)): field.one()})
        acc = acc + c * shift
    return acc


def _content(coeffs):
    polys = sorted(coeffs.values(), key=lambda f: len(f.terms))
    g = polys[0]
    for h in polys[1:]:
        g = gcd_poly(g, h)
        if g.is_constant():
            break
    return g.monic()


def _prem(A, B, v, field, nvars):
    """Pseudo-remainder of A by B as univariate dicts in x_v.

    Returns a dict proportional to the true pseudo-remainder; the caller takes
    a primitive part immediately, so the extra content factor is harmless.
    """
    db = max(B)
    lcb = B[db]
    R = dict(A)
    while R:
        e = max(R)
        if e < db:
            break
        lcr = R.pop(e)
        nxt = {}
        for k, c in R.items():
            nxt[k] = c * lcb
        for k, c in B.items():
            if k == db:
                continue
            kk = k + e - db
            prev = nxt.get(kk)
            delta = c * lcr
            nxt[kk] = -delta if prev is None else prev - delta
        R = {k: c for k, c in nxt.items() if not c.is_zero()}
    return R


def gcd_poly(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd of two polynomials over a field."""
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.is_constant() or g.is_constant():
        return Polynomial.constant(f.field, f.nvars, 1)
    f._check(g)
    used = set(f.used_vars()) | set(g.used_vars())
    v = max(used)
    A = _as_univariate(f, v)
    B = _as_univariate(g, v)
    if max(A) < max(B):
        A, B = B, A
    cont_a = _content(A)
    cont_b = _content(B)
    A = {e: divide_exact(c, cont_a) for e, c in A.items()}
    B = {e: divide_exact(c, cont_b) for e, c in B.items()}
    while B:
        R = _prem(A, B, v, f.field, f.nvars)
        if R:
            cont = _content(R)
            R = {e: divide_exact(c, cont) for e, c in R.items()}
        A, B = B, R
    cont_gcd = gcd_poly(cont_a, cont_b)
    prim = _from_univariate(A, v, f.field, f.nvars)
    return (prim * cont_gcd).monic()


def _umul(u, v, p):
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a == 0:
            continue
        for j, b in enumerate(v):
            out[i + j] += a * b
    if p is not None:
        out = [c % p for c in out]
    while out and out[-1] == 0:
        out.pop()
    return out


def _line_poly(f, pt, direction):
    """Coefficients of t -> f(pt + t * direction), constant term first."""
    p = f.field.p
    caches = [{0: [f.field.one()]} for _ in range(f.nvars)]
    acc = []
    for m, c in f.terms.items():
        term = [c]
        for i, e in enumerate(m):
            if e == 0:
                continue
            cache = caches[i]
            if e not in cache:
                top = max(k for k in cache if k < e)
                cur = cache[top]
                base = [pt[i], direction[i]]
                for k in range(top, e):
                    cur = _umul(cur, base, p)
                    cache[k + 1] = cur
            term = _umul(term, cache[e], p)
            if not term:
                break
        if len(term) > len(acc):
            acc.extend([0] * (len(term) - len(acc)))
        for i, a in enumerate(term):
            acc[i] += a
    if p is not None:
        acc = [c % p for c in acc]
    while acc and acc[-1] == 0:
        acc.pop()
    return acc


def _uni_gcd_degree(u, v, field):
    while v:
        inv = field.inv(v[-1])
        vm = [c * inv % field.p if field.p is not None else c * inv for c in v]
        r = list(u)
        while len(r) >= len(vm):
            lead = r[-1]
            if lead != 0:
                off = len(r) - len(vm)
                for i, c in enumerate(vm):
                    r[off + i] -= lead * c
                    if field.p is not None:
                        r[off + i] %= field.p
            r.pop()
        while r and r[-1] == 0:
            r.pop()
        u, v = vm, r
    return len(u) - 1


def _certified_squarefree(f):
    """True when a random line restriction proves f squarefree.

    A full-degree restriction factors through the factorization of f, so a
    squarefree restriction rules out repeated factors.  False is inconclusive.
    """
    d = f.total_degree()
    if d <= 0:
        return True
    p = f.field.p
    rng = RngState(0x5AFE11FE)
    for _ in range(4):
        if p is not None:
            pt = [rng.next_mod(p) for _ in range(f.nvars)]
            line = [rng.next_mod(p) for _ in range(f.nvars)]
        else:
            pt = [rng.next_mod(201) - 100 for _ in range(f.nvars)]
            line = [rng.next_mod(201) - 100 for _ in range(f.nvars)]
        u = _line_poly(f, pt, line)
        if len(u) - 1 != d:
            continue
        du = [i * c for i, c in enumerate(u)][1:]
        if p is not None:
            du = [c % p for c in du]
        while du and du[-1] == 0:
            du.pop()
        if _uni_gcd_degree(u, du, f.field) == 0:
            return True
    return False


def squarefree_part(f: Polynomial) -> Polynomial:
    """Monic product of the distinct irreducible factors of f.

    Over a prime field this is valid when the characteristic exceeds the
    degree of f, which every caller in this package guarantees.
    """
    if f.is_zero():
        raise ValueError("zero polynomial has no squarefree part")
    if f.field.p is not None and f.total_degree() >= f.field.p:
        raise ValueError("characteristic too small for a reliable squarefree part")
    if _certified_squarefree(f):
        return f.monic()
    h = f
    for i in f.used_vars():
        d = f.diff(i)
        if not d.is_zero():
            h = gcd_poly(h, d)
        if h.is_constant():
            break
    if h.is_constant():
        return f.monic()
    return divide_exact(f, h).monic()


def is_squarefree(f: Polynomial) -> bool:
    if not f.is_zero() and _certified_squarefree(f):
        return True
    return squarefree_part(f).total_degree() == f.total_degree()
