"""Sparse multivariate polynomials with exact coefficients.

Terms are a dict mapping exponent tuples to nonzero coefficients.  The dict is
built in grevlex-descending key order at construction, so iteration (and hence
serialization) is deterministic regardless of how the polynomial was produced.
"""

from fractions import Fraction

from .field import QQ, FieldSpec
from .order import GREVLEX, _grevlex_key


def _sorted_terms(raw):
    return sorted(raw.items(), key=lambda kv: _grevlex_key(kv[0]), reverse=True)


class Polynomial:
    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field, nvars, terms=None):
        self.field = field
        self.nvars = nvars
        clean = {}
        if terms:
            p = field.p
            for m, c in terms.items():
                if len(m) != nvars:
                    raise ValueError(f"monomial arity {len(m)} != nvars {nvars}")
                c = c % p if p is not None and isinstance(c, int) else field.coerce(c)
                if c:
                    clean[m] = c
        self.terms = dict(_sorted_terms(clean))

    @classmethod
    def _raw(cls, field, nvars, clean):
        """Internal: clean must already be pruned/normalized; only sorts."""
        self = object.__new__(cls)
        self.field = field
        self.nvars = nvars
        self.terms = dict(_sorted_terms(clean))
        return self

    # ---- constructors ----

    @classmethod
    def zero(cls, field, nvars):
        return cls._raw(field, nvars, {})

    @classmethod
    def constant(cls, field, nvars, c):
        c = field.coerce(c)
        return cls._raw(field, nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, field, nvars, i):
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range")
        m = tuple(1 if j == i else 0 for j in range(nvars))
        return cls._raw(field, nvars, {m: field.one()})

    # ---- predicates ----

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and sum(next(iter(self.terms))) == 0)

    def constant_value(self):
        if not self.terms:
            return self.field.zero()
        (m, c), = self.terms.items()
        if sum(m) != 0:
            raise ValueError("not a constant")
        return c

    def total_degree(self):
        """Degree of the zero polynomial is -1 by convention here."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self, weights=None):
        """Return (True, degree) for (weighted-)homogeneous, else (False, None).

        The zero polynomial counts as homogeneous of every degree; reported as
        (True, 0).
        """
        if not self.terms:
            return (True, 0)
        degs = set()
        for m in self.terms:
            if weights is None:
                degs.add(sum(m))
            else:
                degs.add(sum(e * w for e, w in zip(m, weights)))
        if len(degs) == 1:
            return (True, degs.pop())
        return (False, None)

    # ---- arithmetic ----

    def _check(self, other):
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.nvars != other.nvars:
            raise ValueError("variable-context mismatch")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return self + Polynomial.constant(self.field, self.nvars, other)
        self._check(other)
        p = self.field.p
        res = dict(self.terms)
        for m, c in other.terms.items():
            v = res.get(m, 0) + c
            if p is not None:
                v %= p
            if v:
                res[m] = v
            elif m in res:
                del res[m]
        return Polynomial._raw(self.field, self.nvars, res)

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        if p is None:
            return Polynomial._raw(self.field, self.nvars, {m: -c for m, c in self.terms.items()})
        return Polynomial._raw(self.field, self.nvars, {m: p - c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return self - Polynomial.constant(self.field, self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.field.coerce(other)
            if not c:
                return Polynomial.zero(self.field, self.nvars)
            p = self.field.p
            if p is None:
                return Polynomial._raw(self.field, self.nvars,
                                       {m: v * c for m, v in self.terms.items()})
            return Polynomial._raw(self.field, self.nvars,
                                   {m: v * c % p for m, v in self.terms.items()})
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        p = self.field.p
        res = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
                res[m] = res.get(m, 0) + c1 * c2
        if p is not None:
            res = {m: c % p for m, c in res.items() if c % p}
        else:
            res = {m: c for m, c in res.items() if c}
        return Polynomial._raw(self.field, self.nvars, res)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.field, self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, self.nvars, tuple(self.terms.items())))

    # ---- leading data ----

    def leading_monomial(self, order=GREVLEX):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        if order is GREVLEX or order == GREVLEX:
            return next(iter(self.terms))
        return max(self.terms, key=order.key)

    def leading_coeff(self, order=GREVLEX):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order=GREVLEX):
        if not self.terms:
            return self
        lc = self.leading_coeff(order)
        if lc == self.field.one():
            return self
        return self * self.field.inv(lc)

    # ---- calculus / substitution ----

    def diff(self, i):
        if not 0 <= i < self.nvars:
            raise ValueError(f"variable index {i} out of range")
        p = self.field.p
        res = {}
        for m, c in self.terms.items():
            e = m[i]
            if e == 0:
                continue
            c2 = c * e
            if p is not None:
                c2 %= p
            if not c2:
                continue
            m2 = m[:i] + (e - 1,) + m[i + 1:]
            res[m2] = res.get(m2, 0) + c2
        res = {m: c for m, c in res.items() if c}
        return Polynomial._raw(self.field, self.nvars, res)

    def substitute(self, assignments):
        """Simultaneously substitute polynomials (or constants) for variables.

        assignments maps variable index -> Polynomial (same context) or scalar.
        """
        subs = {}
        for i, v in assignments.items():
            if not 0 <= i < self.nvars:
                raise ValueError(f"variable index {i} out of range")
            if isinstance(v, Polynomial):
                self._check(v)
                subs[i] = v
            else:
                subs[i] = Polynomial.constant(self.field, self.nvars, v)
        out = Polynomial.zero(self.field, self.nvars)
        pow_cache = {}
        for m, c in self.terms.items():
            term = Polynomial.constant(self.field, self.nvars, c)
            for i, e in enumerate(m):
                if e == 0:
                    continue
                if i in subs:
                    key = (i, e)
                    if key not in pow_cache:
                        pow_cache[key] = subs[i] ** e
                    term = term * pow_cache[key]
                else:
                    term = term * Polynomial._raw(
                        self.field, self.nvars,
                        {tuple(e if j == i else 0 for j in range(self.nvars)): self.field.one()},
                    )
            out = out + term
        return out

    def evaluate(self, point):
        """Evaluate at a full point (list of field scalars)."""
        if len(point) != self.nvars:
            raise ValueError("point arity mismatch")
        p = self.field.p
        total = self.field.zero()
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = v * (x ** e if p is None else pow(x, e, p))
            total = total + v
        return total % p if p is not None else total

    def map_vars(self, mapping, new_nvars):
        """Relabel variables: old index i -> mapping[i] in a new context."""
        res = {}
        for m, c in self.terms.items():
            m2 = [0] * new_nvars
            for i, e in enumerate(m):
                if e:
                    m2[mapping[i]] += e
            m2 = tuple(m2)
            res[m2] = res.get(m2, 0) + c
        p = self.field.p
        if p is not None:
            res = {m: c % p for m, c in res.items() if c % p}
        else:
            res = {m: c for m, c in res.items() if c}
        return Polynomial._raw(self.field, new_nvars, res)

    def pad(self, new_nvars):
        """Embed into a context with extra trailing variables."""
        if new_nvars < self.nvars:
            raise ValueError("pad cannot shrink the context")
        if new_nvars == self.nvars:
            return self
        tail = (0,) * (new_nvars - self.nvars)
        return Polynomial._raw(self.field, new_nvars,
                               {m + tail: c for m, c in self.terms.items()})

    def drop_var(self, i):
        """Remove a variable the polynomial does not use."""
        res = {}
        for m, c in self.terms.items():
            if m[i] != 0:
                raise ValueError(f"variable {i} still occurs")
            res[m[:i] + m[i + 1:]] = c
        return Polynomial._raw(self.field, self.nvars - 1, res)

    def used_vars(self):
        used = [False] * self.nvars
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used[i] = True
        return [i for i, u in enumerate(used) if u]

    def homogenize(self, i, degree):
        """Multiply each term by x_i**(degree - its degree); degree must cover all terms."""
        res = {}
        for m, c in self.terms.items():
            d = sum(m)
            if d > degree:
                raise ValueError("target degree too small")
            m2 = m[:i] + (m[i] + degree - d,) + m[i + 1:]
            res[m2] = res.get(m2, 0) + c
        p = self.field.p
        if p is not None:
            res = {m: c % p for m, c in res.items() if c % p}
        else:
            res = {m: c for m, c in res.items() if c}
        return Polynomial._raw(self.field, self.nvars, res)

    def __repr__(self):
        from .parse import poly_to_string
        names = [f"x{i}" for i in range(self.nvars)]
        try:
            s = poly_to_string(self, names)
        except ValueError:
            s = f"<{len(self.terms)} terms>"
        return f"Polynomial({self.field!r}, {s})"


def arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    """Dispatch add/sub/mul by name (thin convenience wrapper)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op: {op}")


def jacobian(f: Polynomial, var_indices=None):
    if var_indices is None:
        var_indices = range(f.nvars)
    return [f.diff(i) for i in var_indices]


# ---- determinants: two independent strategies ----

def determinant_cofactor(M):
    """Laplace expansion down the leftmost remaining column, memoized on the
    surviving row set (exploits sparsity)."""
    n = _check_square(M)
    if n == 0:
        return None
    field, nvars = M[0][0].field, M[0][0].nvars
    one = Polynomial.constant(field, nvars, 1)
    memo = {}

    def minor(rows):
        if not rows:
            return one
        if rows in memo:
            return memo[rows]
        j = n - len(rows)
        acc = Polynomial.zero(field, nvars)
        for pos, r in enumerate(rows):
            e = M[r][j]
            if not e:
                continue
            sub = minor(rows[:pos] + rows[pos + 1:])
            term = e * sub
            acc = acc + term if pos % 2 == 0 else acc - term
        memo[rows] = acc
        return acc

    return minor(tuple(range(n)))


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact division f / g; raises ValueError if g does not divide f."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    f._check(g)
    field, nvars = f.field, f.nvars
    glm = g.leading_monomial()
    glc = g.terms[glm]
    glc_inv = field.inv(glc)
    q = {}
    rem = dict(f.terms)
    p = field.p
    while rem:
        m = max(rem, key=_grevlex_key)
        c = rem[m]
        if any(a < b for a, b in zip(m, glm)):
            raise ValueError("not divisible")
        qm = tuple(a - b for a, b in zip(m, glm))
        qc = c * glc_inv
        if p is not None:
            qc %= p
        q[qm] = qc
        for gm, gc in g.terms.items():
            mm = tuple(a + b for a, b in zip(qm, gm))
            v = rem.get(mm, 0) - qc * gc
            if p is not None:
                v %= p
            if v:
                rem[mm] = v
            elif mm in rem:
                del rem[mm]
    return Polynomial._raw(field, nvars, q)


def divides_exactly(f: Polynomial, g: Polynomial) -> bool:
    try:
        divide_exact(f, g)
        return True
    except ValueError:
        return False


def determinant_bareiss(M):
    """Fraction-free Bareiss elimination over the polynomial ring."""
    n = _check_square(M)
    if n == 0:
        return None
    field, nvars = M[0][0].field, M[0][0].nvars
    B = [list(row) for row in M]
    sign = 1
    one = Polynomial.constant(field, nvars, 1)
    prev = one
    for k in range(n - 1):
        if not B[k][k]:
            for i in range(k + 1, n):
                if B[i][k]:
                    B[k], B[i] = B[i], B[k]
                    sign = -sign
                    break
            else:
                return Polynomial.zero(field, nvars)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = B[i][j] * B[k][k] - B[i][k] * B[k][j]
                B[i][j] = num if prev == one else divide_exact(num, prev)
        prev = B[k][k]
    out = B[n - 1][n - 1]
    return out if sign == 1 else -out


def determinant(M, method="cofactor"):
    """Exact determinant of a square matrix of Polynomial.

    Two independent strategies are provided; tests hold them to agreement.
    """
    if method == "cofactor":
        out = determinant_cofactor(M)
    elif method == "bareiss":
        out = determinant_bareiss(M)
    else:
        raise ValueError(f"unknown method: {method}")
    if out is None:
        raise ValueError("empty matrix")
    return out


def _check_square(M):
    n = len(M)
    for row in M:
        if len(row) != n:
            raise ValueError("non-square matrix")
    return n
