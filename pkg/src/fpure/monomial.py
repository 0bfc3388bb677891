"""Combinatorial fast path for monomial ideals.

Monomials here are bare exponent tuples; a MonomialIdeal is its minimal
generating set.  Everything in this module is exact integer combinatorics,
no Groebner machinery.
"""

from __future__ import annotations

import itertools
import warnings
from fractions import Fraction

from .ring import monomial_divides, monomial_lcm


def _minimalize(gens):
    """Remove generators divisible by another generator."""
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    out = []
    for g in gens:
        if not any(monomial_divides(h, g) for h in out):
            out.append(g)
    return tuple(out)


class MonomialIdeal:
    """Monomial ideal kept as its (unique) minimal generating set."""

    __slots__ = ("nvars", "gens")

    def __init__(self, nvars, gens):
        self.nvars = nvars
        for g in gens:
            if len(g) != nvars:
                raise ValueError("generator length mismatch")
        self.gens = _minimalize(tuple(tuple(g) for g in gens))

    # -- predicates ------------------------------------------------------

    def is_zero(self):
        return not self.gens

    def is_unit(self):
        return bool(self.gens) and not any(self.gens[0])

    def is_squarefree(self):
        return all(all(e <= 1 for e in g) for g in self.gens)

    def contains(self, mono):
        return any(monomial_divides(g, mono) for g in self.gens)

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.gens)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.nvars == other.nvars
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.nvars, self.gens))

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("mixed variable sets")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        return MonomialIdeal(self.nvars, self.gens + other.gens)

    def product(self, other):
        self._check(other)
        if self.is_zero() or other.is_zero():
            return MonomialIdeal(self.nvars, ())
        return MonomialIdeal(
            self.nvars,
            [
                tuple(a + b for a, b in zip(g, h))
                for g in self.gens
                for h in other.gens
            ],
        )

    def power(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = MonomialIdeal(self.nvars, ((0,) * self.nvars,))
        for _ in range(n):
            out = out.product(self)
        return out

    def intersection(self, other):
        self._check(other)
        if self.is_zero() or other.is_zero():
            return MonomialIdeal(self.nvars, ())
        return MonomialIdeal(
            self.nvars,
            [monomial_lcm(g, h) for g in self.gens for h in other.gens],
        )

    def quotient_mono(self, mono):
        """(I : x^mono) -- per-generator division."""
        return MonomialIdeal(
            self.nvars,
            [tuple(max(a - b, 0) for a, b in zip(g, mono)) for g in self.gens],
        )

    def quotient(self, other):
        """(I : J) = intersection of (I : g) over generators g of J."""
        self._check(other)
        if other.is_zero():
            return MonomialIdeal(self.nvars, ((0,) * self.nvars,))
        out = None
        for g in other.gens:
            q = self.quotient_mono(g)
            out = q if out is None else out.intersection(q)
        return out

    def frobenius(self, q):
        return MonomialIdeal(
            self.nvars, [tuple(e * q for e in g) for g in self.gens]
        )

    # -- combinatorics ------------------------------------------------------

    def supports(self):
        return [frozenset(i for i, e in enumerate(g) if e) for g in self.gens]

    def dimension(self):
        """dim of the quotient ring: nvars - height."""
        if self.is_zero():
            return self.nvars
        if self.is_unit():
            return -1
        return self.nvars - self.height()

    def height(self):
        covers = minimal_covers(self.supports())
        return min(len(c) for c in covers)

    def bigheight(self):
        covers = minimal_covers(self.supports())
        return max(len(c) for c in covers)

    def __repr__(self):
        return f"MonomialIdeal({list(self.gens)})"


def mono_ops(I, J, op):
    """Dispatch form used by tests and the CLI."""
    if op == "sum":
        return I + J
    if op == "product":
        return I.product(J)
    if op == "intersection":
        return I.intersection(J)
    if op == "quotient":
        return I.quotient(J)
    raise ValueError(f"unknown op {op!r}")


def minimal_covers(supports):
    """Minimal vertex covers (hitting sets) of a list of supports."""
    supports = [s for s in supports if s]
    covers = [frozenset()]
    for edge in sorted(supports, key=len):
        nxt = set()
        for c in covers:
            if c & edge:
                nxt.add(c)
            else:
                for v in edge:
                    nxt.add(c | {v})
        covers = nxt
    minimal = []
    for c in sorted(covers, key=lambda c: (len(c), sorted(c))):
        if not any(m <= c for m in minimal):
            minimal.append(c)
    return minimal


def minimal_primes_squarefree(I):
    """Minimal primes of a square-free monomial ideal, as variable sets."""
    if not I.is_squarefree():
        raise ValueError("ideal is not square-free")
    return [sorted(c) for c in minimal_covers(I.supports())]


def _lower_set_minimals(nvars, caps, predicate):
    """Minimal exponent tuples m <= caps with predicate(m) true.

    The predicate must be monotone (true stays true as m grows).  Brute
    force over the capped box, then domination filtering; desk scale only.
    """
    hits = []
    for m in itertools.product(*(range(c + 1) for c in caps)):
        if predicate(m):
            hits.append(m)
    hits.sort(key=lambda m: (sum(m), m))
    out = []
    for m in hits:
        if not any(monomial_divides(k, m) for k in out):
            out.append(m)
    return tuple(out)


def symbolic_power_squarefree(I, n):
    """n-th symbolic power of a square-free monomial ideal.

    Intersection of the n-th powers of the minimal primes, computed as the
    valuation ideal of the cover indicator vectors.
    """
    if n < 0:
        raise ValueError("negative power")
    if n == 0:
        return MonomialIdeal(I.nvars, ((0,) * I.nvars,))
    primes = minimal_primes_squarefree(I)
    vals = [
        MonomialValuation([1 if i in set(c) else 0 for i in range(I.nvars)])
        for c in primes
    ]
    return ValuationFiltration(I.nvars, vals).ideal(n)


class MonomialValuation:
    """v(x^n) = n . a, extended to polynomials by the min over support."""

    __slots__ = ("a",)

    def __init__(self, a):
        self.a = tuple(int(x) for x in a)
        if any(x < 0 for x in self.a):
            raise ValueError("valuation vector must be nonnegative")
        if not any(self.a):
            raise ValueError("valuation vector must be nonzero")

    def of_monomial(self, exps):
        return sum(x * e for x, e in zip(self.a, exps))

    def of_poly(self, f):
        if f.is_zero():
            raise ValueError("valuation of zero")
        return min(self.of_monomial(e) for e, _ in f.terms)

    def __repr__(self):
        return f"MonomialValuation({list(self.a)})"


class ValuationFiltration:
    """I_n = monomials with v_i >= n for every listed valuation; memoized."""

    def __init__(self, nvars, valuations):
        self.nvars = nvars
        self.valuations = list(valuations)
        if not self.valuations:
            raise ValueError("at least one valuation required")
        for v in self.valuations:
            if len(v.a) != nvars:
                raise ValueError("valuation length mismatch")
        self._memo = {}

    def ideal(self, n):
        got = self._memo.get(n)
        if got is None:
            got = self._compute(n)
            self._memo[n] = got
        return got

    def _compute(self, n):
        if n <= 0:
            return MonomialIdeal(self.nvars, ((0,) * self.nvars,))
        # a variable unconstrained by every valuation never helps reach
        # level n; cap it at zero so it is excluded from generator support
        caps = []
        for j in range(self.nvars):
            per = [
                -(-n // v.a[j]) for v in self.valuations if v.a[j] > 0
            ]
            caps.append(max(per) if per else 0)
        vals = self.valuations

        def ok(m):
            return all(v.of_monomial(m) >= n for v in vals)

        gens = _lower_set_minimals(self.nvars, caps, ok)
        if not gens:
            warnings.warn(
                "valuation filtration level is the zero ideal "
                "(a valuation vanishes on the reachable support)",
                stacklevel=2,
            )
        return MonomialIdeal(self.nvars, gens)


def valuation_ideal(filtration, n):
    return filtration.ideal(n)


def monomial_filtration_fpure_check(ideal_at, p, N):
    """Check the monomial-splitting criterion for levels n <= N.

    `ideal_at(n)` must return the filtration level I_n as a MonomialIdeal.
    The trace splitting maps x^a to x^(a/p) when p | a and to 0 otherwise;
    phi((I_{np+1})^(1/p)) lies in I_{n+1} exactly when every generator
    x^a of I_{np+1} has x^(ceil(a/p)) in I_{n+1}.  Returns (True, None) or
    (False, (n, offending generator)).
    """
    for n in range(N + 1):
        big = ideal_at(n * p + 1)
        target = ideal_at(n + 1)
        for g in big.gens:
            root = tuple(-(-e // p) for e in g)
            if not target.contains(root):
                return False, (n, g)
    return True, None


# -- Newton polyhedra ----------------------------------------------------


def _facet_normals(points, nvars):
    """Inequalities a.x >= c (a >= 0) cutting out conv(points) + R^d_{>=0}.

    Brute force: candidate normals from (d-1)-subsets of points joined
    with coordinate rays, validated by the support-function check.  Always
    includes the coordinate inequalities x_j >= 0 implicitly (not listed).
    """
    if nvars > 6:
        raise ValueError("Newton polyhedron dimension budget exceeded (> 6)")
    d = nvars
    if d == 1:
        c = min(pt[0] for pt in points)
        return [((1,), c)] if c > 0 else []
    rays = [tuple(1 if k == j else 0 for k in range(d)) for j in range(d)]
    facets = set()
    # a facet's affine hull is spanned by one base point plus d-1 directions
    # (vertex differences and recession rays), so size-d subsets with at
    # least one point cover every facet; points precede rays in the pool
    pool = [("p", pt) for pt in points] + [("r", r) for r in rays]
    for subset in itertools.combinations(pool, d):
        if subset[0][0] != "p":
            continue
        base = subset[0][1]
        dirs = []
        for kind, v in subset[1:]:
            if kind == "r":
                dirs.append(v)
            else:
                dirs.append(tuple(x - y for x, y in zip(v, base)))
        if len(dirs) != d - 1:
            continue
        normal = _orthogonal_vector(dirs, d)
        if normal is None or not any(normal):
            continue
        if any(x < 0 for x in normal) and any(x > 0 for x in normal):
            continue
        if all(x <= 0 for x in normal):
            normal = tuple(-x for x in normal)
        # support value; the inequality normal.x >= c is always valid, and
        # every true facet arises from one of the subsets, so redundant
        # supporting half-spaces are harmless
        c = min(sum(a * b for a, b in zip(normal, pt)) for pt in points)
        if c > 0:
            g = _gcd_all(normal + (c,))
            facets.add((tuple(x // g for x in normal), c // g))
    return sorted(facets)


def _orthogonal_vector(dirs, d):
    """Integer vector orthogonal to all rows of `dirs` (rank d-1 expected)."""
    rows = [list(Fraction(x) for x in v) for v in dirs]
    # Gaussian elimination to row echelon
    pivots = []
    r = 0
    for c in range(d):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if r != d - 1:
        return None
    free = [c for c in range(d) if c not in pivots][0]
    sol = [Fraction(0)] * d
    sol[free] = Fraction(1)
    for i, c in enumerate(pivots):
        sol[c] = -rows[i][free]
    denom = 1
    for x in sol:
        denom = denom * x.denominator // _gcd2(denom, x.denominator)
    ints = tuple(int(x * denom) for x in sol)
    return ints


def _gcd2(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a or 1


def _gcd_all(xs):
    g = 0
    for x in xs:
        g = _gcd2(g, x)
    return g or 1


def newton_facets(I):
    """Facet data [(normal a, value c)] of the Newton polyhedron of I."""
    if I.is_zero():
        raise ValueError("Newton polyhedron of the zero ideal")
    return _facet_normals(list(I.gens), I.nvars)


def newton_integral_closure(I):
    """Monomials with exponent vector in the Newton polyhedron of I."""
    if I.is_zero() or I.is_unit():
        return I
    facets = newton_facets(I)
    caps = [max(g[j] for g in I.gens) for j in range(I.nvars)]

    def ok(m):
        return all(
            sum(a * x for a, x in zip(normal, m)) >= c for normal, c in facets
        )

    return MonomialIdeal(I.nvars, _lower_set_minimals(I.nvars, caps, ok))


def rees_valuation_data(I):
    """Normalized facet valuations (v_i, value u on I) with common value u.

    Facet normals of the Newton polyhedron are the Rees valuations of a
    monomial ideal; each is rescaled so that all take value
    u = lcm(facet values) on I.
    """
    facets = newton_facets(I)
    u = 1
    for _, c in facets:
        u = u * c // _gcd2(u, c)
    vals = [
        MonomialValuation(tuple(x * (u // c) for x in normal))
        for normal, c in facets
    ]
    return vals, u


def rational_power(I, n, u=None):
    """(n/u)-th rational power of I; u defaults to the derived lcm.

    Membership: for every Rees valuation v with v(I) = u0 (normalized),
    x^m belongs iff u0-normalized v(m) * u >= n * u0, i.e. v(m) >= n*u0/u.
    """
    if n < 0:
        raise ValueError("negative level")
    if I.is_zero() or I.is_unit():
        raise ValueError("rational powers need a proper nonzero ideal")
    if n == 0:
        return MonomialIdeal(I.nvars, ((0,) * I.nvars,))
    vals, u0 = rees_valuation_data(I)
    if u is None:
        u = u0
    thresholds = [Fraction(n * u0, u)] * len(vals)
    caps = []
    for j in range(I.nvars):
        per = [
            -(-thresholds[i] // Fraction(v.a[j]))
            for i, v in enumerate(vals)
            if v.a[j] > 0
        ]
        caps.append(int(max(per)) if per else 0)

    def ok(m):
        return all(
            v.of_monomial(m) >= thresholds[i] for i, v in enumerate(vals)
        )

    return MonomialIdeal(I.nvars, _lower_set_minimals(I.nvars, caps, ok))
