"""Exact multivariate polynomial arithmetic over F_p.

Polynomials are immutable.  Terms are kept as a tuple of (exponent-tuple,
coefficient) pairs, strictly decreasing in the ring's ambient order, with
coefficients as canonical residues in [1, p).  The empty term tuple is the
zero polynomial.
"""

from __future__ import annotations

from .ring import (
    RingContext,
    monomial_div,
    monomial_divides,
    monomial_mul,
    zero_exps,
)


class Polynomial:
    __slots__ = ("ring", "terms", "_key")

    def __init__(self, ring, terms, _sorted=False):
        """terms: iterable of (exps, coeff); merged and normalized here."""
        self.ring = ring
        if _sorted:
            self.terms = tuple(terms)
        else:
            acc = {}
            p = ring.p
            for exps, c in terms:
                c = (acc.get(exps, 0) + c) % p
                if c:
                    acc[exps] = c
                else:
                    acc.pop(exps, None)
            key = ring.order.key
            self.terms = tuple(
                (e, acc[e]) for e in sorted(acc, key=key, reverse=True)
            )
        self._key = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(ring):
        return Polynomial(ring, (), _sorted=True)

    @staticmethod
    def constant(ring, c):
        c %= ring.p
        if c == 0:
            return Polynomial.zero(ring)
        return Polynomial(ring, ((zero_exps(ring.nvars), c),), _sorted=True)

    @staticmethod
    def variable(ring, i):
        e = [0] * ring.nvars
        e[i] = 1
        return Polynomial(ring, ((tuple(e), 1),), _sorted=True)

    @staticmethod
    def monomial(ring, exps, c=1):
        c %= ring.p
        if c == 0:
            return Polynomial.zero(ring)
        return Polynomial(ring, ((tuple(exps), c),), _sorted=True)

    # -- basic queries -------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return (
            len(self.terms) == 1
            and self.terms[0][1] == 1
            and not any(self.terms[0][0])
        )

    def is_monomial(self):
        return len(self.terms) == 1

    def lead(self):
        """Leading (exps, coeff) under the ambient order; f must be nonzero."""
        if not self.terms:
            raise ValueError("zero polynomial has no initial term")
        return self.terms[0]

    def lead_exps(self):
        return self.lead()[0]

    def wdeg(self):
        """Weighted total degree (max over terms); -1 for zero."""
        if not self.terms:
            return -1
        wd = self.ring.wdeg
        return max(wd(e) for e, _ in self.terms)

    def is_homogeneous(self):
        if not self.terms:
            return True
        wd = self.ring.wdeg
        degs = {wd(e) for e, _ in self.terms}
        return len(degs) == 1

    def coefficient(self, exps):
        for e, c in self.terms:
            if e == exps:
                return c
        return 0

    # -- arithmetic ----------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("mixed ring contexts")

    def __add__(self, other):
        self._check(other)
        return Polynomial(self.ring, self.terms + other.terms)

    def __sub__(self, other):
        self._check(other)
        p = self.ring.p
        neg = tuple((e, p - c) for e, c in other.terms)
        return Polynomial(self.ring, self.terms + neg)

    def __neg__(self):
        p = self.ring.p
        return Polynomial(
            self.ring, tuple((e, p - c) for e, c in self.terms), _sorted=True
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        p = self.ring.p
        a, b = self.terms, other.terms
        if not a or not b:
            return Polynomial.zero(self.ring)
        if len(a) > len(b):
            a, b = b, a
        acc = {}
        for ea, ca in a:
            for eb, cb in b:
                e = monomial_mul(ea, eb)
                c = (acc.get(e, 0) + ca * cb) % p
                if c:
                    acc[e] = c
                else:
                    del acc[e]
        key = self.ring.order.key
        return Polynomial(
            self.ring,
            tuple((e, acc[e]) for e in sorted(acc, key=key, reverse=True)),
            _sorted=True,
        )

    __rmul__ = __mul__

    def scale(self, c):
        c %= self.ring.p
        if c == 0:
            return Polynomial.zero(self.ring)
        if c == 1:
            return self
        p = self.ring.p
        return Polynomial(
            self.ring, tuple((e, (c * k) % p) for e, k in self.terms), _sorted=True
        )

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.ring.inv(self.terms[0][1]))

    def mul_term(self, exps, c):
        """Multiply by the term c * x^exps (order-preserving on terms)."""
        c %= self.ring.p
        if c == 0:
            return Polynomial.zero(self.ring)
        p = self.ring.p
        return Polynomial(
            self.ring,
            tuple((monomial_mul(e, exps), (c * k) % p) for e, k in self.terms),
            _sorted=True,
        )

    def frobenius(self, e=1):
        """f^(p^e), computed term-wise (Frobenius is a ring map in char p)."""
        q = self.ring.p ** e
        return Polynomial(
            self.ring,
            tuple((tuple(x * q for x in ex), pow(c, q, self.ring.p)) for ex, c in self.terms),
            _sorted=True,
        )

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        ring = self.ring
        if n == 0:
            return Polynomial.constant(ring, 1)
        # base-p digits keep intermediate products small in char p
        p = ring.p
        result = None
        base = self
        while n:
            n, d = divmod(n, p)
            if d:
                piece = base
                for _ in range(d - 1):
                    piece = piece * base
                result = piece if result is None else result * piece
            if n:
                base = base.frobenius()
        return result

    def substitute(self, target, images):
        """Image under the map sending variable i to images[i] (in `target`)."""
        if len(images) != self.ring.nvars:
            raise ValueError("one image per variable required")
        out = Polynomial.zero(target)
        for exps, c in self.terms:
            term = Polynomial.constant(target, c)
            for i, e in enumerate(exps):
                if e:
                    term = term * images[i] ** e
            out = out + term
        return out

    # -- char-p specific -----------------------------------------------

    def outside_frobenius_max(self, e=1):
        """True iff f is not in m^[p^e] = (x_i^{p^e}).

        m^[p^e] is a monomial ideal, so f lies outside exactly when some
        term has every exponent <= p^e - 1.
        """
        q = self.ring.p ** e
        for exps, _ in self.terms:
            if all(x < q for x in exps):
                return True
        return False

    # -- comparisons / hashing ------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._key is None:
            self._key = hash((self.ring.p, self.ring.names, self.terms))
        return self._key

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        from .parser import poly_to_string

        return poly_to_string(self)


def initial_term(f, order=None):
    """Order-largest term of f as a (coefficient, exponent-tuple) pair."""
    if f.is_zero():
        raise ValueError("zero polynomial has no initial term")
    if order is None or order == f.ring.order:
        e, c = f.terms[0]
        return c, e
    key = order.key
    e, c = max(f.terms, key=lambda t: key(t[0]))
    return c, e


def initial_monomial(f, order=None):
    """Leading monomial of f, as a monic Polynomial."""
    c, e = initial_term(f, order)
    return Polynomial.monomial(f.ring, e, 1)


def poly_arith(f, g, op):
    """Dispatch form of binary arithmetic used by the CLI."""
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown op {op!r}")


def pth_root_splitting_image(ring, exps, e=1):
    """x^(n/p^e) when p^e divides every exponent, else None.

    This is the image of the monomial under the trace-map splitting that
    sends fractional-exponent monomials to zero.
    """
    q = ring.p ** e
    out = []
    for x in exps:
        if x % q:
            return None
        out.append(x // q)
    return tuple(out)
