"""Monomial orders: grevlex, lex, and a two-block grevlex order.

A monomial is a tuple of non-negative exponents. Each order provides a sort
key such that key(a) > key(b) iff a > b in the order; 1 (the zero tuple) is
minimal for all of them.
"""


def _grevlex_key(exps):
    total = 0
    for e in exps:
        total += e
    return (total, tuple(-e for e in reversed(exps)))


def _lex_key(exps):
    return tuple(exps)


class MonomialOrder:
    __slots__ = ("kind", "split", "key")

    def __init__(self, kind, split=None):
        if kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown order kind: {kind}")
        if kind == "block":
            if not isinstance(split, int) or split <= 0:
                raise ValueError("block order needs a positive split index")
        self.kind = kind
        self.split = split
        if kind == "grevlex":
            self.key = _grevlex_key
        elif kind == "lex":
            self.key = _lex_key
        else:
            s = split

            def block_key(exps, _s=s):
                return (_grevlex_key(exps[:_s]), _grevlex_key(exps[_s:]))

            self.key = block_key

    def greater(self, a, b):
        return self.key(a) > self.key(b)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.kind == other.kind
            and self.split == other.split
        )

    def __hash__(self):
        return hash((self.kind, self.split))

    def __repr__(self):
        if self.kind == "block":
            return f"MonomialOrder(block, split={self.split})"
        return f"MonomialOrder({self.kind})"


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def block_order(split: int) -> MonomialOrder:
    return MonomialOrder("block", split)
