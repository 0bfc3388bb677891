"""Ring contexts: prime fields, weighted variables, monomial orders.

A monomial is a tuple of nonnegative integer exponents, one entry per ring
variable.  Orders are realized as key functions: ``order.key(exps)`` returns
a tuple that sorts like the monomial, so ``max(terms, key=...)`` and sorted
term lists need no custom comparators.
"""

from __future__ import annotations

from functools import lru_cache


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class MonomialOrder:
    """Total multiplicative well-order on monomials.

    kind 'lex': lexicographic with an explicit ranking (variable indices,
    most significant first).  kind 'grevlex': weighted degree, ties broken
    reverse-lexicographically.  kind 'block': an elimination order, the
    variables in ``block`` compared lex above an inner order on the rest.
    """

    __slots__ = ("kind", "ranking", "weights", "block", "inner", "_tag")

    def __init__(self, kind, ranking=None, weights=None, block=None, inner=None):
        self.kind = kind
        self.ranking = tuple(ranking) if ranking is not None else None
        self.weights = tuple(weights) if weights is not None else None
        self.block = tuple(block) if block is not None else None
        self.inner = inner
        if kind == "lex":
            self._tag = ("lex", self.ranking)
        elif kind == "grevlex":
            self._tag = ("grevlex", self.weights)
        elif kind == "block":
            self._tag = ("block", self.block, inner._tag)
        else:
            raise ValueError(f"unknown order kind {kind!r}")

    @staticmethod
    def lex(ranking):
        return MonomialOrder("lex", ranking=ranking)

    @staticmethod
    def grevlex(weights):
        return MonomialOrder("grevlex", weights=weights)

    @staticmethod
    def elimination(block, inner):
        """Block order: `block` variables lex on top of `inner` on the rest."""
        return MonomialOrder("block", block=block, inner=inner)

    def key(self, exps):
        """Flat integer tuple; componentwise negation inverts the order."""
        k = self.kind
        if k == "lex":
            return tuple(exps[i] for i in self.ranking)
        if k == "grevlex":
            w = self.weights
            deg = 0
            for i, e in enumerate(exps):
                deg += w[i] * e
            return (deg,) + tuple(-e for e in reversed(exps))
        # block
        head = tuple(exps[i] for i in self.block)
        return head + self.inner.key(exps)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self._tag == other._tag

    def __hash__(self):
        return hash(self._tag)

    def __repr__(self):
        if self.kind == "lex":
            return f"lex{list(self.ranking)}"
        if self.kind == "grevlex":
            return "grevlex"
        return f"block({list(self.block)}; {self.inner!r})"


class RingContext:
    """Polynomial ring F_p[vars] with per-variable weights and ambient order.

    Weights must be positive for rings used in polynomial arithmetic; the
    degree-bound calculators treat the weight-0 convention purely
    arithmetically and never build a RingContext for it.
    """

    __slots__ = ("p", "names", "weights", "order", "nvars", "_index", "_inv")

    def __init__(self, p, names, weights=None, order=None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if p >= 2**31:
            raise ValueError("characteristic too large (must be < 2^31)")
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        self.p = p
        self.names = names
        self.nvars = len(names)
        if weights is None:
            weights = (1,) * self.nvars
        weights = tuple(int(w) for w in weights)
        if len(weights) != self.nvars:
            raise ValueError("one weight per variable required")
        if any(w < 1 for w in weights):
            raise ValueError("weights must be >= 1")
        self.weights = weights
        if order is None:
            order = MonomialOrder.grevlex(weights)
        self.order = order
        self._index = {n: i for i, n in enumerate(names)}
        self._inv = {}

    def index(self, name):
        return self._index[name]

    def inv(self, c):
        """Inverse of c mod p, cached."""
        c %= self.p
        v = self._inv.get(c)
        if v is None:
            v = pow(c, self.p - 2, self.p)
            self._inv[c] = v
        return v

    def wdeg(self, exps):
        """Weighted degree of a monomial."""
        w = self.weights
        return sum(w[i] * e for i, e in enumerate(exps))

    def same_variables(self, other):
        return (
            self.p == other.p
            and self.names == other.names
            and self.weights == other.weights
        )

    def compatible(self, other):
        return self.same_variables(other) and self.order == other.order

    def with_order(self, order):
        return RingContext(self.p, self.names, self.weights, order)

    def extend(self, new_names, new_weights=None, order=None, prepend=False):
        """Ring with extra variables; used internally for eliminations."""
        new_names = tuple(new_names)
        if new_weights is None:
            new_weights = (1,) * len(new_names)
        if prepend:
            names = new_names + self.names
            weights = tuple(new_weights) + self.weights
        else:
            names = self.names + new_names
            weights = self.weights + tuple(new_weights)
        if order is None:
            order = MonomialOrder.grevlex(weights)
        return RingContext(self.p, names, weights, order)

    def __eq__(self, other):
        return isinstance(other, RingContext) and self.compatible(other)

    def __hash__(self):
        return hash((self.p, self.names, self.weights, self.order))

    def __repr__(self):
        vs = ",".join(
            n if w == 1 else f"{n}:{w}" for n, w in zip(self.names, self.weights)
        )
        return f"F_{self.p}[{vs}]"


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a, b):
    """True when monomial a divides monomial b."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def monomial_div(a, b):
    """Quotient a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def monomial_gcd(a, b):
    return tuple(x if x < y else y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def zero_exps(n):
    return (0,) * n
