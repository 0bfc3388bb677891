"""Text grammar for rings and polynomials.

Header::

    ring p=<prime> vars <name>[:<weight>], ... ; order lex(<perm>)|grevlex ;

followed by polynomial expressions over ``+ - * ^ ( )``, integer literals
and variable names.  Whitespace-insensitive.  ``lex`` takes the ranking as
a comma list of variable names (or 0-based indices), most significant
first; a bare ``lex`` means declaration order.
"""

from __future__ import annotations

import re

from .poly import Polynomial
from .ring import MonomialOrder, RingContext

_NAME = r"[A-Za-z][A-Za-z0-9_]*"
_TOKEN = re.compile(rf"\s*({_NAME}|\d+|[-+*^(),;:=])")


class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class _Tokens:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def peek(self):
        m = _TOKEN.match(self.text, self.pos)
        if m is None:
            if self.text[self.pos :].strip():
                raise ParseError("unexpected character", self.pos)
            return None
        return m.group(1)

    def next(self):
        m = _TOKEN.match(self.text, self.pos)
        if m is None:
            raise ParseError("unexpected end of input", self.pos)
        self.pos = m.end()
        return m.group(1)

    def expect(self, tok):
        got = self.next()
        if got != tok:
            raise ParseError(f"expected {tok!r}, got {got!r}", self.pos)


def parse_ring(text):
    """Parse a ring header; returns (RingContext, rest-of-text)."""
    ts = _Tokens(text)
    ts.expect("ring")
    ts.expect("p")
    ts.expect("=")
    p = int(ts.next())
    ts.expect("vars")
    names, weights = [], []
    while True:
        names.append(ts.next())
        if ts.peek() == ":":
            ts.next()
            weights.append(int(ts.next()))
        else:
            weights.append(1)
        tok = ts.next()
        if tok == ";":
            break
        if tok != ",":
            raise ParseError("expected ',' or ';' in variable list", ts.pos)
    ts.expect("order")
    kind = ts.next()
    index = {n: i for i, n in enumerate(names)}
    if kind == "grevlex":
        order = MonomialOrder.grevlex(weights)
    elif kind == "lex":
        ranking = list(range(len(names)))
        if ts.peek() == "(":
            ts.next()
            ranking = []
            while True:
                tok = ts.next()
                ranking.append(index[tok] if tok in index else int(tok))
                tok = ts.next()
                if tok == ")":
                    break
                if tok != ",":
                    raise ParseError("expected ',' or ')' in ranking", ts.pos)
            if sorted(ranking) != list(range(len(names))):
                raise ParseError("ranking is not a permutation", ts.pos)
        order = MonomialOrder.lex(ranking)
    else:
        raise ParseError(f"unknown order {kind!r}", ts.pos)
    ts.expect(";")
    ring = RingContext(p, names, weights, order)
    return ring, text[ts.pos :]


def parse_poly(ring, text):
    """Parse one polynomial expression in `ring`."""
    ts = _Tokens(text)
    f = _expr(ring, ts)
    if ts.peek() is not None:
        raise ParseError(f"trailing input {ts.peek()!r}", ts.pos)
    return f


def _expr(ring, ts):
    tok = ts.peek()
    if tok == "-":
        ts.next()
        f = -_term(ring, ts)
    else:
        if tok == "+":
            ts.next()
        f = _term(ring, ts)
    while True:
        tok = ts.peek()
        if tok == "+":
            ts.next()
            f = f + _term(ring, ts)
        elif tok == "-":
            ts.next()
            f = f - _term(ring, ts)
        else:
            return f


def _term(ring, ts):
    f = _power(ring, ts)
    while True:
        tok = ts.peek()
        if tok == "*":
            ts.next()
            f = f * _power(ring, ts)
        elif tok is not None and (tok[0].isalnum() or tok == "("):
            # implicit multiplication: 3x, x(y+1)
            f = f * _power(ring, ts)
        else:
            return f


def _power(ring, ts):
    f = _atom(ring, ts)
    while ts.peek() == "^":
        ts.next()
        n = ts.next()
        if not n.isdigit():
            raise ParseError("exponent must be a nonnegative integer", ts.pos)
        f = f ** int(n)
    return f


def _atom(ring, ts):
    tok = ts.next()
    if tok == "(":
        f = _expr(ring, ts)
        ts.expect(")")
        return f
    if tok.isdigit():
        return Polynomial.constant(ring, int(tok))
    if tok in ring._index:
        return Polynomial.variable(ring, ring.index(tok))
    raise ParseError(f"unknown variable {tok!r}", ts.pos)


def monomial_to_string(ring, exps):
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append(ring.names[i])
        elif e > 1:
            parts.append(f"{ring.names[i]}^{e}")
    return "*".join(parts) if parts else "1"


def poly_to_string(f):
    if f.is_zero():
        return "0"
    ring = f.ring
    parts = []
    for exps, c in f.terms:
        mono = monomial_to_string(ring, exps)
        if mono == "1":
            chunk = str(c)
        elif c == 1:
            chunk = mono
        else:
            chunk = f"{c}*{mono}"
        parts.append(chunk)
    return " + ".join(parts)


def ring_to_string(ring):
    vs = ",".join(
        n if w == 1 else f"{n}:{w}" for n, w in zip(ring.names, ring.weights)
    )
    o = ring.order
    if o.kind == "grevlex":
        os = "grevlex"
    elif o.kind == "lex":
        os = "lex(" + ",".join(ring.names[i] for i in o.ranking) + ")"
    else:
        raise ValueError("block orders have no surface syntax")
    return f"ring p={ring.p} vars {vs}; order {os};"
