"""Text form of polynomials.

Grammar (whitespace insignificant between tokens):

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' UINT)?
    base   := INT | VAR | '(' expr ')'

A single optional leading '-' before the first term is also accepted.
Exponents must be bare unsigned integers, so ``x0^(2)`` is a syntax error.
"""

from fractions import Fraction

from .core import Polynomial

_MAX_EXPONENT = 10 ** 6


class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def _tokenize(s):
    toks = []
    i, n = 0, len(s)
    while i < n:
        ch = s[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and s[j].isdigit():
                j += 1
            toks.append(("INT", s[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (s[j].isalnum() or s[j] == "_"):
                j += 1
            toks.append(("NAME", s[i:j], i))
            i = j
            continue
        if ch in "+-*^()":
            toks.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    toks.append(("END", "", n))
    return toks


class _Parser:
    def __init__(self, toks, names, field, nvars):
        self.toks = toks
        self.k = 0
        self.index = {name: i for i, name in enumerate(names)}
        self.field = field
        self.nvars = nvars

    def peek(self):
        return self.toks[self.k]

    def take(self, kind=None):
        tok = self.toks[self.k]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind}, got {tok[1]!r}" if tok[1]
                             else f"expected {kind}, got end of input", tok[2])
        self.k += 1
        return tok

    def expr(self):
        negate = False
        if self.peek()[0] == "-":
            self.take()
            negate = True
        acc = self.term()
        if negate:
            acc = -acc
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self):
        base = self.base()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("INT")
            e = int(tok[1])
            if e > _MAX_EXPONENT:
                raise ParseError("exponent too large", tok[2])
            return base ** e
        return base

    def base(self):
        kind, text, pos = self.peek()
        if kind == "INT":
            self.take()
            return Polynomial.constant(self.field, self.nvars, int(text))
        if kind == "NAME":
            self.take()
            if text not in self.index:
                raise ParseError(f"unknown variable {text!r}", pos)
            return Polynomial.variable(self.field, self.nvars, self.index[text])
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"expected a number, variable, or '(', got {text!r}" if text
                         else "unexpected end of input", pos)


def parse_poly(s, names, field):
    """Parse text into a Polynomial over `field` in the given variable names."""
    if len(set(names)) != len(names):
        raise ValueError("duplicate variable names")
    toks = _tokenize(s)
    parser = _Parser(toks, names, field, len(names))
    out = parser.expr()
    end = parser.peek()
    if end[0] != "END":
        raise ParseError(f"trailing input {end[1]!r}", end[2])
    return out


def _monomial_str(m, names):
    parts = []
    for e, name in zip(m, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def poly_to_string(poly, names):
    """Serialize with terms in grevlex-descending order.

    Only integer coefficients are representable; a rational coefficient with
    denominator != 1 raises ValueError.  Prime-field coefficients print as
    their representatives in 0..p-1.
    """
    if len(names) != poly.nvars:
        raise ValueError("name list arity mismatch")
    if not poly.terms:
        return "0"
    pieces = []
    for m, c in poly.terms.items():
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError("coefficient is not an integer")
            c = c.numerator
        neg = c < 0
        mag = -c if neg else c
        mono = _monomial_str(m, names)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(pieces)
