"""Buchberger's algorithm with normal pair selection and a work budget.

The reduction core operates on raw term dicts (exponent tuple -> coefficient)
rather than Polynomial objects; profiling showed object churn dominated
otherwise.  Budget units are elementary coefficient updates performed during
reduction, so runtime is roughly proportional to budget spent.
"""

import heapq
from bisect import bisect_left

from .core import Polynomial
from .order import GREVLEX, MonomialOrder

DEFAULT_BUDGET = 2_000_000


class BudgetExceeded(RuntimeError):
    def __init__(self, used, limit):
        super().__init__(f"reduction budget exhausted ({used} > {limit})")
        self.used = used
        self.limit = limit


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def charge(self, n):
        self.used += n
        if self.used > self.limit:
            raise BudgetExceeded(self.used, self.limit)


def _negkey_fn(order: MonomialOrder):
    """Componentwise negation of the order key, for max-behavior on a min-heap."""
    if order.kind == "grevlex":
        return lambda m: (-sum(m), tuple(reversed(m)))
    if order.kind == "lex":
        return lambda m: tuple(-e for e in m)
    if order.kind == "block":
        s = order.split
        return lambda m: (
            (-sum(m[:s]), tuple(reversed(m[:s]))),
            (-sum(m[s:]), tuple(reversed(m[s:]))),
        )
    raise ValueError(f"unsupported order kind: {order.kind}")


def _monic_terms(terms, lm, p):
    lc = terms[lm]
    if p is None:
        if lc == 1:
            return dict(terms)
        inv = 1 / lc
        return {m: c * inv for m, c in terms.items()}
    if lc == 1:
        return dict(terms)
    inv = pow(lc, p - 2, p)
    return {m: c * inv % p for m, c in terms.items()}


def _normal_form_raw(f_terms, reducers, red_index, order, negkey, p, budget):
    """Fully reduce the term dict f_terms modulo monic reducers.

    reducers: list of (lm, terms) with terms monic; red_index: indices into
    reducers sorted ascending by order key of lm.  Returns a new term dict.
    """
    if not f_terms:
        return {}
    work = dict(f_terms)
    heap = [(negkey(m), m) for m in work]
    heapq.heapify(heap)
    out = {}
    pop = heapq.heappop
    push = heapq.heappush
    while heap:
        _, m = pop(heap)
        c = work.get(m)
        if not c:
            work.pop(m, None)
            continue
        hit = None
        for idx in red_index:
            lm = reducers[idx][0]
            ok = True
            for a, b in zip(m, lm):
                if a < b:
                    ok = False
                    break
            if ok:
                hit = reducers[idx]
                break
        if hit is None:
            out[m] = c
            del work[m]
            continue
        lm, terms = hit
        q = tuple(a - b for a, b in zip(m, lm))
        budget.charge(len(terms))
        if p is None:
            for gm, gc in terms.items():
                mm = tuple(a + b for a, b in zip(q, gm))
                v = work.get(mm)
                fresh = v is None
                v = (0 if fresh else v) - c * gc
                if v:
                    work[mm] = v
                    if fresh:
                        push(heap, (negkey(mm), mm))
                elif not fresh:
                    del work[mm]
        else:
            for gm, gc in terms.items():
                mm = tuple(a + b for a, b in zip(q, gm))
                v = work.get(mm)
                fresh = v is None
                v = ((0 if fresh else v) - c * gc) % p
                if v:
                    work[mm] = v
                    if fresh:
                        push(heap, (negkey(mm), mm))
                elif not fresh:
                    del work[mm]
    return out


def _spoly_raw(lm_i, terms_i, lm_j, terms_j, lcm, p):
    qi = tuple(a - b for a, b in zip(lcm, lm_i))
    qj = tuple(a - b for a, b in zip(lcm, lm_j))
    res = {}
    for m, c in terms_i.items():
        res[tuple(a + b for a, b in zip(qi, m))] = c
    for m, c in terms_j.items():
        mm = tuple(a + b for a, b in zip(qj, m))
        v = res.get(mm, 0) - c
        if p is not None:
            v %= p
        if v:
            res[mm] = v
        elif mm in res:
            del res[mm]
    return res


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


class GroebnerBasis:
    """A reduced Groebner basis together with its monomial order."""

    def __init__(self, polys, order, budget_used=0):
        self.polys = polys
        self.order = order
        self.budget_used = budget_used

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.polys]

    def _nf_data(self):
        try:
            return self._nf_cache
        except AttributeError:
            key = self.order.key
            reducers = [(g.leading_monomial(self.order), dict(g.terms))
                        for g in self.polys]
            red_index = sorted(range(len(reducers)),
                               key=lambda i: key(reducers[i][0]))
            self._nf_cache = (reducers, red_index, _negkey_fn(self.order))
            return self._nf_cache

    def normal_form(self, f, budget=DEFAULT_BUDGET):
        if not isinstance(f, Polynomial):
            raise TypeError("expected a Polynomial")
        if not self.polys:
            return f
        field = self.polys[0].field
        reducers, red_index, negkey = self._nf_data()
        out = _normal_form_raw(f.terms, reducers, red_index, self.order, negkey,
                               field.p, _Budget(budget))
        return Polynomial._raw(field, f.nvars, out)

    def contains(self, f, budget=DEFAULT_BUDGET):
        return self.normal_form(f, budget=budget).is_zero()


def groebner(polys, order=GREVLEX, budget=DEFAULT_BUDGET):
    """Compute the reduced Groebner basis of the ideal generated by polys."""
    polys = [f for f in polys if f is not None and not f.is_zero()]
    if not polys:
        return GroebnerBasis([], order)
    field = polys[0].field
    nvars = polys[0].nvars
    for f in polys:
        if f.field != field or f.nvars != nvars:
            raise ValueError("generators live in different contexts")
    p = field.p
    key = order.key
    negkey = _negkey_fn(order)
    bud = _Budget(budget)

    lms = []      # leading monomials, parallel to basis
    basis = []    # monic raw term dicts
    red_index = []   # basis indices sorted ascending by key(lm)
    red_keys = []    # the corresponding keys, for bisect
    reducers = []    # (lm, terms) view used by the reduction core

    def insert(terms):
        lm = max(terms, key=key)
        terms = _monic_terms(terms, lm, p)
        i = len(basis)
        lms.append(lm)
        basis.append(terms)
        reducers.append((lm, terms))
        k = key(lm)
        pos = bisect_left(red_keys, k)
        red_keys.insert(pos, k)
        red_index.insert(pos, i)
        return i

    pairs = []        # min-heap of (key(lcm), lcm, i, j)
    pending = set()   # (i, j) pairs not yet treated

    def push_pairs(j):
        lmj = lms[j]
        for i in range(j):
            lmi = lms[i]
            lcm = tuple(max(a, b) for a, b in zip(lmi, lmj))
            if all(a + b == c for a, b, c in zip(lmi, lmj, lcm)):
                continue  # disjoint leading supports: S-pair reduces to zero
            heapq.heappush(pairs, (key(lcm), lcm, i, j))
            pending.add((i, j))

    seed = sorted((dict(f.terms) for f in polys), key=lambda t: key(max(t, key=key)))
    for terms in seed:
        nf = _normal_form_raw(terms, reducers, red_index, order, negkey, p, bud)
        if nf:
            push_pairs(insert(nf))

    while pairs:
        _, lcm, i, j = heapq.heappop(pairs)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if _divides(lms[k], lcm):
                a = (i, k) if i < k else (k, i)
                b = (j, k) if j < k else (k, j)
                if a not in pending and b not in pending:
                    skip = True
                    break
        if skip:
            continue
        s = _spoly_raw(lms[i], basis[i], lms[j], basis[j], lcm, p)
        nf = _normal_form_raw(s, reducers, red_index, order, negkey, p, bud)
        if nf:
            push_pairs(insert(nf))

    # Minimalize: drop elements whose leading monomial another one divides.
    order_asc = sorted(range(len(basis)), key=lambda i: key(lms[i]))
    kept = []
    for i in order_asc:
        if not any(_divides(lms[k], lms[i]) for k in kept):
            kept.append(i)

    # Inter-reduce the tails.
    final = []
    for pos, i in enumerate(kept):
        others = [(lms[k], basis[k]) for k in kept if k != i]
        oidx = sorted(range(len(others)), key=lambda t: key(others[t][0]))
        nf = _normal_form_raw(basis[i], others, oidx, order, negkey, p, bud)
        final.append(_monic_terms(nf, max(nf, key=key), p))

    final.sort(key=lambda t: key(max(t, key=key)), reverse=True)
    out = [Polynomial._raw(field, nvars, t) for t in final]
    return GroebnerBasis(out, order, budget_used=bud.used)


class InfiniteDimensional(ValueError):
    pass


def quotient_dimension(gens, order=GREVLEX, budget=DEFAULT_BUDGET):
    """Dimension of the quotient by the ideal as a vector space.

    Accepts either a GroebnerBasis or a list of generators.  Raises
    InfiniteDimensional when the quotient is not finite-dimensional.
    """
    gb = gens if isinstance(gens, GroebnerBasis) else groebner(gens, order, budget)
    if not gb.polys:
        raise InfiniteDimensional("zero ideal")
    nvars = gb.polys[0].nvars
    lms = gb.leading_monomials()
    if any(sum(m) == 0 for m in lms):
        return 0
    if nvars == 0:
        return 1
    for i in range(nvars):
        if not any(m[i] > 0 and sum(m) == m[i] for m in lms):
            raise InfiniteDimensional(f"no pure power of variable {i} among leading monomials")
    return _staircase_count(lms, nvars)


def _staircase_count(lms, nvars):
    """Number of monomials outside the staircase generated by lms."""
    if any(sum(m) == 0 for m in lms):
        return 0
    if nvars == 0:
        return 1
    last = nvars - 1
    bound = min(m[last] for m in lms if sum(m) == m[last])
    total = 0
    for e in range(bound):
        shrunk = [m[:last] for m in lms if m[last] <= e]
        total += _staircase_count(_minimalize(shrunk), last)
    return total


def _minimalize(lms):
    lms = sorted(set(lms), key=lambda m: (sum(m), m))
    out = []
    for m in lms:
        if not any(_divides(k, m) for k in out):
            out.append(m)
    return out
