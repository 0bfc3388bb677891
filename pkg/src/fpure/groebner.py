"""Buchberger engine and derived ideal operations.

Everything is deterministic: pair selection follows the normal strategy
(smallest weighted lcm degree first, ties broken by order key and index),
and reduced Groebner bases are unique for a fixed order, so repeated runs
agree exactly.
"""

from __future__ import annotations

import heapq
import itertools

from .poly import Polynomial
from .ring import (
    MonomialOrder,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)

DEFAULT_MAX_PAIRS = 10**6


class BudgetExceeded(RuntimeError):
    """Raised when a computation exceeds its S-pair budget."""

    def __init__(self, pairs, limit):
        super().__init__(
            f"S-pair budget exceeded: {pairs} pairs processed (limit {limit})"
        )
        self.pairs = pairs
        self.limit = limit


def _neg(key):
    return tuple(-k for k in key)


def _prep(basis, ring):
    """Precompute (lead exps, inverse lead coeff, tail terms) per element."""
    out = []
    for g in basis:
        le, lc = g.terms[0]
        out.append((le, ring.inv(lc), g.terms[1:]))
    return out


def _reduce_terms(ring, order, terms, prepped, full=True):
    """Remainder of division by `prepped`; returns the term dict."""
    p = ring.p
    key = order.key
    work = dict(terms)
    heap = [(_neg(key(e)), e) for e in work]
    heapq.heapify(heap)
    result = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = work.get(e)
        if c is None:
            continue
        hit = None
        for le, linv, tail in prepped:
            if monomial_divides(le, e):
                hit = (le, linv, tail)
                break
        if hit is None:
            del work[e]
            if full:
                result[e] = c
                continue
            result[e] = c
            result.update(work)
            return result
        le, linv, tail = hit
        q = monomial_div(e, le)
        factor = (c * linv) % p
        del work[e]
        for ge, gc in tail:
            te = monomial_mul(ge, q)
            nc = (work.get(te, 0) - factor * gc) % p
            if nc:
                if te not in work:
                    heapq.heappush(heap, (_neg(key(te)), te))
                work[te] = nc
            else:
                work.pop(te, None)
    return result


def _terms_to_poly(ring, order, acc):
    key = order.key
    return Polynomial(
        ring,
        tuple((e, acc[e]) for e in sorted(acc, key=key, reverse=True)),
        _sorted=True,
    )


def normal_form(f, basis, order=None):
    """Remainder of f under full division by `basis` (a list or a GB)."""
    if isinstance(basis, GroebnerBasis):
        order = basis.order
        basis = basis.elements
    ring = f.ring
    order = order or ring.order
    basis = [g for g in basis if not g.is_zero()]
    if f.is_zero() or not basis:
        return f
    if order == ring.order:
        prepped = _prep(basis, ring)
    else:
        resorted = [_terms_to_poly(ring, order, dict(g.terms)) for g in basis]
        prepped = _prep(resorted, ring)
        f = _terms_to_poly(ring, order, dict(f.terms))
    acc = _reduce_terms(ring, order, f.terms, prepped, full=True)
    return _terms_to_poly(ring, ring.order, acc)


def divide_exact(f, g):
    """Quotient f/g when g divides f exactly; raises otherwise."""
    ring = f.ring
    order = ring.order
    p = ring.p
    le, lc = g.terms[0]
    linv = ring.inv(lc)
    tail = g.terms[1:]
    work = dict(f.terms)
    key = order.key
    quo = {}
    while work:
        e = max(work, key=key)
        c = work.pop(e)
        if not monomial_divides(le, e):
            raise ArithmeticError("division is not exact")
        q = monomial_div(e, le)
        factor = (c * linv) % p
        quo[q] = factor
        for ge, gc in tail:
            te = monomial_mul(ge, q)
            nc = (work.get(te, 0) - factor * gc) % p
            if nc:
                work[te] = nc
            else:
                work.pop(te, None)
    return _terms_to_poly(ring, order, quo)


class GroebnerBasis:
    """Reduced Groebner basis: monic, auto-reduced, sorted by lead."""

    __slots__ = ("elements", "order", "ring", "_prepped")

    def __init__(self, elements, order, ring):
        self.elements = tuple(elements)
        self.order = order
        self.ring = ring
        self._prepped = None

    def prepped(self):
        if self._prepped is None:
            self._prepped = _prep(self.elements, self.ring)
        return self._prepped

    def reduce(self, f):
        if f.is_zero() or not self.elements:
            return f
        acc = _reduce_terms(self.ring, self.order, f.terms, self.prepped())
        return _terms_to_poly(self.ring, self.ring.order, acc)

    def contains(self, f):
        return self.reduce(f).is_zero()

    def leads(self):
        return [g.terms[0][0] for g in self.elements]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def buchberger(gens, order=None, max_pairs=DEFAULT_MAX_PAIRS):
    """Reduced Groebner basis of the ideal generated by `gens`.

    Normal selection strategy; Buchberger's coprime and chain criteria.
    Raises BudgetExceeded past `max_pairs` processed S-pairs.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("buchberger requires at least one nonzero generator")
    ring = gens[0].ring
    order = order or ring.order
    if order != ring.order:
        work_ring = ring.with_order(order)
        gens = [Polynomial(work_ring, dict(g.terms).items()) for g in gens]
    else:
        work_ring = ring

    key = order.key
    wdeg = work_ring.wdeg
    G = []
    seen_leads = set()
    for g in sorted(gens, key=lambda h: key(h.terms[0][0])):
        g = g.monic()
        if g.terms not in seen_leads:
            seen_leads.add(g.terms)
            G.append(g)

    lead = [g.terms[0][0] for g in G]
    pairs = {}

    def push_pair(i, j):
        li, lj = lead[i], lead[j]
        lcm = monomial_lcm(li, lj)
        if lcm == monomial_mul(li, lj):  # coprime criterion
            return
        pairs[(i, j)] = lcm

    n = len(G)
    for j in range(n):
        for i in range(j):
            push_pair(i, j)

    processed = 0
    while pairs:
        (i, j) = min(
            pairs, key=lambda ij: (wdeg(pairs[ij]), key(pairs[ij]), ij)
        )
        lcm = pairs.pop((i, j))
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if monomial_divides(lead[k], lcm):
                a, b = (i, k) if i < k else (k, i)
                c, d = (j, k) if j < k else (k, j)
                if (a, b) not in pairs and (c, d) not in pairs:
                    skip = True
                    break
        if skip:
            continue
        processed += 1
        if processed > max_pairs:
            raise BudgetExceeded(processed, max_pairs)
        fi, fj = G[i], G[j]
        s = fi.mul_term(monomial_div(lcm, lead[i]), 1) - fj.mul_term(
            monomial_div(lcm, lead[j]), 1
        )
        if s.is_zero():
            continue
        acc = _reduce_terms(work_ring, order, s.terms, _prep(G, work_ring))
        if not acc:
            continue
        h = _terms_to_poly(work_ring, order, acc).monic()
        G.append(h)
        lead.append(h.terms[0][0])
        m = len(G) - 1
        for k in range(m):
            push_pair(k, m)

    # minimalize: drop elements whose lead is divisible by another lead
    order_idx = sorted(range(len(G)), key=lambda i: key(lead[i]))
    keep = []
    for i in order_idx:
        if not any(monomial_divides(lead[k], lead[i]) for k in keep):
            keep.append(i)
    minimal = [G[i] for i in keep]

    # inter-reduce tails for the unique reduced basis
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        acc = _reduce_terms(work_ring, order, g.terms, _prep(others, work_ring))
        reduced.append(_terms_to_poly(work_ring, order, acc).monic())
    reduced.sort(key=lambda g: key(g.terms[0][0]), reverse=True)
    if order != ring.order:
        reduced = [Polynomial(ring, dict(g.terms).items()) for g in reduced]
    return GroebnerBasis(reduced, order, ring)


class Ideal:
    """Ideal of a RingContext with cached reduced Groebner bases."""

    __slots__ = ("ring", "gens", "_gb", "_mingens")

    def __init__(self, ring, gens):
        self.ring = ring
        cleaned = []
        for g in gens:
            if isinstance(g, Polynomial):
                if g.ring != ring:
                    raise ValueError("mixed ring contexts")
                if not g.is_zero():
                    cleaned.append(g)
            else:
                raise TypeError("ideal generators must be Polynomials")
        self.gens = tuple(cleaned)
        self._gb = {}
        self._mingens = None

    @staticmethod
    def zero(ring):
        return Ideal(ring, ())

    @staticmethod
    def unit(ring):
        return Ideal(ring, (Polynomial.constant(ring, 1),))

    def is_zero(self):
        return not self.gens

    def groebner(self, order=None, max_pairs=DEFAULT_MAX_PAIRS):
        order = order or self.ring.order
        gb = self._gb.get(order)
        if gb is None:
            if not self.gens:
                gb = GroebnerBasis((), order, self.ring)
            else:
                gb = buchberger(self.gens, order, max_pairs=max_pairs)
            self._gb[order] = gb
        return gb

    def set_cached_basis(self, gb):
        self._gb[gb.order] = gb

    def normal_form(self, f, order=None):
        return self.groebner(order).reduce(f)

    def contains(self, f):
        if f.is_zero():
            return True
        if self.is_zero():
            return False
        return self.groebner().contains(f)

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.gens)

    def equals(self, other):
        return self.contains_ideal(other) and other.contains_ideal(self)

    def is_unit(self):
        return self.contains(Polynomial.constant(self.ring, 1))

    # -- constructions --------------------------------------------------

    def __add__(self, other):
        return Ideal(self.ring, self.gens + other.gens)

    def product(self, other):
        if self.is_zero() or other.is_zero():
            return Ideal.zero(self.ring)
        return Ideal(
            self.ring, tuple(a * b for a in self.gens for b in other.gens)
        )

    def power(self, n):
        if n < 0:
            raise ValueError("negative ideal power")
        if n == 0:
            return Ideal.unit(self.ring)
        gens = []
        for combo in itertools.combinations_with_replacement(self.gens, n):
            g = combo[0]
            for h in combo[1:]:
                g = g * h
            gens.append(g)
        return Ideal(self.ring, gens)

    def frobenius(self, e=1):
        """I^[p^e]; transfers a cached reduced basis (G^[q] stays reduced)."""
        out = Ideal(self.ring, tuple(g.frobenius(e) for g in self.gens))
        for order, gb in self._gb.items():
            out._gb[order] = GroebnerBasis(
                tuple(g.frobenius(e) for g in gb.elements), order, self.ring
            )
        return out

    def mingens(self, max_pairs=DEFAULT_MAX_PAIRS):
        if self._mingens is None:
            self._mingens = minimal_generators(self, max_pairs=max_pairs)[0]
        return self._mingens

    def minimalized(self):
        return Ideal(self.ring, self.mingens())

    def __repr__(self):
        inside = ", ".join(repr(g) for g in self.gens[:6])
        if len(self.gens) > 6:
            inside += f", ... ({len(self.gens)} gens)"
        return f"Ideal({inside})"


# -- derived operations ------------------------------------------------


def ideal_contains(I, J):
    """I >= J as ideals."""
    return I.contains_ideal(J)


def ideal_equal(I, J):
    return I.equals(J)


def frobenius_power(I, e=1):
    return I.frobenius(e)


def _lift_gens(ring_ext, gens, nold):
    pad = ring_ext.nvars - nold
    out = []
    for g in gens:
        out.append(
            Polynomial(
                ring_ext, tuple((e + (0,) * pad, c) for e, c in g.terms)
            )
        )
    return out


def _restrict(ring, f_ext, nold):
    terms = []
    for e, c in f_ext.terms:
        if any(e[nold:]):
            raise ValueError("polynomial involves auxiliary variables")
        terms.append((e[:nold], c))
    return Polynomial(ring, terms)


def eliminate_aux(ring, gens_ext, ring_ext, max_pairs=DEFAULT_MAX_PAIRS):
    """Intersect the ideal generated by `gens_ext` with the original ring.

    Auxiliary variables sit after the original ones in `ring_ext`; the
    elimination order puts them lexicographically above a grevlex block.
    """
    nold = ring.nvars
    aux = list(range(nold, ring_ext.nvars))
    order = MonomialOrder.elimination(
        aux, MonomialOrder.grevlex(ring_ext.weights)
    )
    gb = buchberger(gens_ext, order, max_pairs=max_pairs)
    kept = [
        _restrict(ring, g, nold)
        for g in gb.elements
        if all(not any(e[nold:]) for e, _ in g.terms)
    ]
    return Ideal(ring, kept)


def ideal_intersection(I, J, max_pairs=DEFAULT_MAX_PAIRS):
    """I cap J via elimination of one auxiliary variable from tI + (1-t)J."""
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal.zero(ring)
    ext = ring.extend(("@t",))
    t = Polynomial.variable(ext, ext.nvars - 1)
    one = Polynomial.constant(ext, 1)
    gens = [t * g for g in _lift_gens(ext, I.gens, ring.nvars)]
    gens += [(one - t) * g for g in _lift_gens(ext, J.gens, ring.nvars)]
    return eliminate_aux(ring, gens, ext, max_pairs=max_pairs)


def ideal_intersection_many(ideals, max_pairs=DEFAULT_MAX_PAIRS):
    out = ideals[0]
    for J in ideals[1:]:
        out = ideal_intersection(out, J, max_pairs=max_pairs)
    return out


def quotient_by_poly(J, f, max_pairs=DEFAULT_MAX_PAIRS):
    """(J : f) via intersection with the principal ideal then division."""
    ring = J.ring
    if f.is_zero():
        raise ValueError("colon by zero")
    if J.is_zero():
        return Ideal.zero(ring)
    meet = ideal_intersection(J, Ideal(ring, (f,)), max_pairs=max_pairs)
    return Ideal(ring, tuple(divide_exact(g, f) for g in meet.gens))


def ideal_quotient(J, I, max_pairs=DEFAULT_MAX_PAIRS):
    """(J : I) as the intersection of the single-element colons."""
    if I.is_zero():
        return Ideal.unit(J.ring)
    parts = [quotient_by_poly(J, f, max_pairs=max_pairs) for f in I.gens]
    return ideal_intersection_many(parts, max_pairs=max_pairs)


def saturation(J, f, max_pairs=DEFAULT_MAX_PAIRS):
    """(J : f^inf) via elimination of w from J + (w f - 1)."""
    ring = J.ring
    if f.is_zero():
        raise ValueError("saturation by zero")
    if J.is_zero():
        return Ideal.zero(ring)
    ext = ring.extend(("@w",))
    w = Polynomial.variable(ext, ext.nvars - 1)
    one = Polynomial.constant(ext, 1)
    f_ext = _lift_gens(ext, (f,), ring.nvars)[0]
    gens = _lift_gens(ext, J.gens, ring.nvars) + [w * f_ext - one]
    return eliminate_aux(ring, gens, ext, max_pairs=max_pairs)


def minimal_generators(I, max_pairs=DEFAULT_MAX_PAIRS):
    """Minimal homogeneous generators and their count mu.

    Candidates are scanned degree by degree; one is kept exactly when it
    is not in the ideal generated by those already kept (graded Nakayama
    makes the count independent of choices).
    """
    gens = [g for g in I.gens if not g.is_zero()]
    if not gens:
        return [], 0
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError("minimal_generators requires homogeneous input")
    gens.sort(key=lambda g: (g.wdeg(), g.ring.order.key(g.terms[0][0])))
    kept = []
    basis = None
    for g in gens:
        if basis is not None:
            if normal_form(g, basis).is_zero():
                continue
        kept.append(g)
        basis = buchberger(kept, I.ring.order, max_pairs=max_pairs)
    return kept, len(kept)


def initial_ideal(I, order=None, max_pairs=DEFAULT_MAX_PAIRS):
    """Monomial ideal of initial terms, from the reduced Groebner basis."""
    from .monomial import MonomialIdeal

    order = order or I.ring.order
    if I.is_zero():
        return MonomialIdeal(I.ring.nvars, ())
    gb = I.groebner(order, max_pairs=max_pairs)
    return MonomialIdeal(I.ring.nvars, [g.terms[0][0] for g in gb.elements])


def krull_dimension(I, max_pairs=DEFAULT_MAX_PAIRS):
    """dim R/I, computed combinatorially from the initial ideal."""
    if I.is_zero():
        return I.ring.nvars
    if I.is_unit():
        return -1
    J = initial_ideal(I, max_pairs=max_pairs)
    return J.dimension()
