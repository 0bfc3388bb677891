"""The four matrix families, their witness polynomials and power formulas.

Families: generic r x s, generic symmetric r x r, generic skew-symmetric
r x r (Pfaffians), and Hankel matrices in c variables.  Each family comes
with the lexicographic order under which initial terms of minors are
diagonal products, a closed height formula, an explicit witness polynomial
with square-free initial term, a structural formula for symbolic powers
(products of the larger-minor ideals), and an intersection formula for
ordinary powers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .groebner import (
    DEFAULT_MAX_PAIRS,
    Ideal,
    ideal_intersection_many,
    saturation,
)
from .poly import Polynomial
from .ring import MonomialOrder, RingContext

GENERIC = "generic"
SYMMETRIC = "symmetric"
SKEW = "skew"
HANKEL = "hankel"


def _nm(letter, i, j):
    if i <= 9 and j <= 9:
        return f"{letter}{i}{j}"
    return f"{letter}_{i}_{j}"


@dataclass(frozen=True)
class MatrixShape:
    family: str
    r: int = 0
    s: int = 0
    j: int = 0
    c: int = 0

    @staticmethod
    def generic(r, s):
        if not (1 <= r <= s):
            raise ValueError("generic shape needs 1 <= r <= s")
        return MatrixShape(GENERIC, r=r, s=s)

    @staticmethod
    def symmetric(r):
        if r < 1:
            raise ValueError("symmetric shape needs r >= 1")
        return MatrixShape(SYMMETRIC, r=r)

    @staticmethod
    def skew(r):
        if r < 1:
            raise ValueError("skew shape needs r >= 1")
        return MatrixShape(SKEW, r=r)

    @staticmethod
    def hankel(j, c):
        if not (1 <= j <= c):
            raise ValueError("hankel shape needs 1 <= j <= c")
        return MatrixShape(HANKEL, j=j, c=c)

    # -- variables -----------------------------------------------------

    def var_names(self):
        f = self.family
        if f == GENERIC:
            return [
                _nm("x", i, j)
                for i in range(1, self.r + 1)
                for j in range(1, self.s + 1)
            ]
        if f == SYMMETRIC:
            return [
                _nm("y", i, j)
                for i in range(1, self.r + 1)
                for j in range(i, self.r + 1)
            ]
        if f == SKEW:
            return [
                _nm("z", i, j)
                for i in range(1, self.r + 1)
                for j in range(i + 1, self.r + 1)
            ]
        return [f"w{k}" for k in range(1, self.c + 1)]

    def nrows(self):
        if self.family == HANKEL:
            return self.j
        return self.r

    def ncols(self):
        if self.family == GENERIC:
            return self.s
        if self.family == HANKEL:
            return self.c + 1 - self.j
        return self.r

    def max_minor_size(self):
        if self.family == GENERIC:
            return self.r
        if self.family == SKEW:
            return self.r // 2  # in Pfaffian half-sizes
        if self.family == HANKEL:
            return min(self.j, self.c + 1 - self.j)
        return self.r


def paper_order(shape):
    """The family's lexicographic order (ranking = variable indices).

    Generic and symmetric use row-major order as displayed.  Skew ranks
    each row's entries by descending column.  For Hankel the plain order
    w1 > w2 > ... > wc is used: it makes the initial term of every minor
    its main-diagonal product, hence square-free, which the displayed
    odd/even interleaving fails to do.
    """
    names = shape.var_names()
    n = len(names)
    if shape.family == SKEW:
        index = {nm: i for i, nm in enumerate(names)}
        ranking = []
        for i in range(1, shape.r + 1):
            for j in range(shape.r, i, -1):
                ranking.append(index[_nm("z", i, j)])
        return MonomialOrder.lex(ranking)
    return MonomialOrder.lex(range(n))


def shape_ring(shape, p):
    return RingContext(p, shape.var_names(), order=paper_order(shape))


def build_matrix(shape, ring=None, p=2):
    """Matrix of ring elements following the family conventions."""
    if ring is None:
        ring = shape_ring(shape, p)
    names = {nm: i for i, nm in enumerate(shape.var_names())}

    def var(nm):
        return Polynomial.variable(ring, names[nm])

    f = shape.family
    if f == GENERIC:
        return [
            [var(_nm("x", i, j)) for j in range(1, shape.s + 1)]
            for i in range(1, shape.r + 1)
        ]
    if f == SYMMETRIC:
        return [
            [
                var(_nm("y", min(i, j), max(i, j)))
                for j in range(1, shape.r + 1)
            ]
            for i in range(1, shape.r + 1)
        ]
    if f == SKEW:
        out = []
        for i in range(1, shape.r + 1):
            row = []
            for j in range(1, shape.r + 1):
                if i == j:
                    row.append(Polynomial.zero(ring))
                elif i < j:
                    row.append(var(_nm("z", i, j)))
                else:
                    row.append(-var(_nm("z", j, i)))
            out.append(row)
        return out
    # hankel: entry (a, b) = w_{a+b-1}
    return [
        [var(f"w{a + b - 1}") for b in range(1, shape.c + 2 - shape.j)]
        for a in range(1, shape.j + 1)
    ]


@dataclass(frozen=True)
class DetIdealSpec:
    shape: MatrixShape
    t: int

    def __post_init__(self):
        t = self.t
        sh = self.shape
        if t < 1:
            raise ValueError("t must be >= 1")
        if sh.family == SKEW:
            if 2 * t > sh.r:
                raise ValueError("skew family needs 2t <= r")
        elif t > sh.max_minor_size():
            raise ValueError("t exceeds the family bound")

    @property
    def kind(self):
        return "pfaffians" if self.shape.family == SKEW else "minors"

    def params(self):
        sh = self.shape
        out = {"family": sh.family, "t": self.t}
        if sh.family == GENERIC:
            out.update(r=sh.r, s=sh.s)
        elif sh.family == HANKEL:
            out.update(j=sh.j, c=sh.c)
        else:
            out.update(r=sh.r)
        return out


class DetContext:
    """One family instance over F_p with memoized minors and ideals."""

    def __init__(self, shape, p):
        self.shape = shape
        self.p = p
        self.ring = shape_ring(shape, p)
        self.matrix = build_matrix(shape, self.ring)
        self._minor_memo = {}
        self._pf_memo = {}
        self._block = {}
        self._symbolic = {}

    # -- determinants and pfaffians --------------------------------------

    def minor(self, rows, cols):
        """Determinant of the submatrix on `rows` x `cols` (0-based)."""
        rows = tuple(rows)
        cols = tuple(cols)
        if len(rows) != len(cols):
            raise ValueError("minor needs a square index selection")
        key = (rows, cols)
        got = self._minor_memo.get(key)
        if got is not None:
            return got
        if not rows:
            out = Polynomial.constant(self.ring, 1)
        else:
            out = Polynomial.zero(self.ring)
            r0 = rows[0]
            rest = rows[1:]
            for k, c in enumerate(cols):
                entry = self.matrix[r0][c]
                if entry.is_zero():
                    continue
                sub = self.minor(rest, cols[:k] + cols[k + 1 :])
                piece = entry * sub
                out = out + piece if k % 2 == 0 else out - piece
        self._minor_memo[key] = out
        return out

    def pfaffian(self, indices):
        """Pfaffian of the principal skew submatrix on `indices` (0-based)."""
        if self.shape.family != SKEW:
            raise ValueError("pfaffians require the skew family")
        idx = tuple(sorted(indices))
        if len(set(idx)) != len(idx):
            raise ValueError("repeated index")
        if any(i < 0 or i >= self.shape.r for i in idx):
            raise ValueError("index out of range")
        if len(idx) % 2:
            return Polynomial.zero(self.ring)
        got = self._pf_memo.get(idx)
        if got is not None:
            return got
        if not idx:
            out = Polynomial.constant(self.ring, 1)
        else:
            out = Polynomial.zero(self.ring)
            i0 = idx[0]
            for k in range(1, len(idx)):
                entry = self.matrix[i0][idx[k]]
                rest = idx[1:k] + idx[k + 1 :]
                piece = entry * self.pfaffian(rest)
                # expansion pf = sum_k (-1)^k a_{i0, i_k} pf(rest), k 1-based
                out = out + piece if (k + 1) % 2 == 0 else out - piece
        self._pf_memo[idx] = out
        return out

    # -- the graded blocks I_j ------------------------------------------

    def block_ideal(self, size):
        """I_size (minors) or P_{2 size} (Pfaffians), memoized."""
        got = self._block.get(size)
        if got is not None:
            return got
        sh = self.shape
        gens = []
        if sh.family == SKEW:
            for idx in itertools.combinations(range(sh.r), 2 * size):
                gens.append(self.pfaffian(idx))
        else:
            if sh.family == HANKEL:
                rows, cols = canonical_hankel_dims(sh.c)
            else:
                rows, cols = sh.nrows(), sh.ncols()
            seen = set()
            for rr in itertools.combinations(range(rows), size):
                for cc in itertools.combinations(range(cols), size):
                    m = self.minor(rr, cc)
                    if not m.is_zero() and m.terms not in seen:
                        seen.add(m.terms)
                        gens.append(m)
        out = Ideal(self.ring, gens)
        self._block[size] = out
        return out

    def max_block(self):
        sh = self.shape
        if sh.family == SKEW:
            return sh.r // 2
        if sh.family == HANKEL:
            return (sh.c + 1) // 2
        return sh.r

    def symbolic_power(self, t, n, minimalize=False):
        key = (t, n, minimalize)
        got = self._symbolic.get(key)
        if got is None:
            got = symbolic_power(DetIdealSpec(self.shape, t), n, ctx=self, minimalize=minimalize)
            self._symbolic[key] = got
        return got


def canonical_hankel_dims(c):
    """Row/column counts of the canonical matrix W^c_m, m = floor((c+1)/2)."""
    m = (c + 1) // 2
    return m, c + 1 - m


_CTX = {}


def context(shape, p):
    key = (shape, p)
    ctx = _CTX.get(key)
    if ctx is None:
        ctx = DetContext(shape, p)
        _CTX[key] = ctx
    return ctx


def minors_ideal(spec, p=2, ctx=None):
    """The family ideal I_t / P_{2t}.

    For Hankel shapes the canonical matrix W^c_m is used; by the change-of-
    shape identity the ideal only depends on c and t.
    """
    ctx = ctx or context(spec.shape, p)
    return ctx.block_ideal(spec.t)


def minors_ideal_of_shape_matrix(spec, p=2):
    """I_t of the shape's own j x (c+1-j) matrix (Hankel j-independence)."""
    sh = spec.shape
    if sh.family != HANKEL:
        return minors_ideal(spec, p)
    ctx = context(sh, p)
    gens = []
    seen = set()
    for rr in itertools.combinations(range(sh.nrows()), spec.t):
        for cc in itertools.combinations(range(sh.ncols()), spec.t):
            m = ctx.minor(rr, cc)
            if not m.is_zero() and m.terms not in seen:
                seen.add(m.terms)
                gens.append(m)
    return Ideal(ctx.ring, gens)


def height(spec):
    """Closed-form height of the family ideal."""
    sh, t = spec.shape, spec.t
    if sh.family == GENERIC:
        return (sh.s - t + 1) * (sh.r - t + 1)
    if sh.family == SYMMETRIC:
        return (sh.r - t + 1) * (sh.r - t + 2) // 2
    if sh.family == SKEW:
        return (sh.r - 2 * t + 1) * (sh.r - 2 * t + 2) // 2
    return sh.c - 2 * t + 2


def witness_polynomial(shape, u, p=2, ctx=None):
    """Product of corner minors / Pfaffians with square-free initial term.

    u indexes the smallest block appearing (in Pfaffian half-sizes for the
    skew family).  For Hankel the parity of c picks the display and u is
    only range-checked.
    """
    ctx = ctx or context(shape, p)
    one = Polynomial.constant(ctx.ring, 1)
    f = one
    fam = shape.family
    if fam == GENERIC:
        r, s = shape.r, shape.s
        if not (1 <= u <= r):
            raise ValueError("u out of range")
        for l in range(u, r):
            f = f * ctx.minor(range(r - l, r), range(0, l))
            f = f * ctx.minor(range(0, l), range(s - l, s))
        for l in range(1, s - r + 2):
            f = f * ctx.minor(range(0, r), range(l - 1, l - 1 + r))
        return f
    if fam == SYMMETRIC:
        r = shape.r
        if not (1 <= u <= r):
            raise ValueError("u out of range")
        for l in range(u, r + 1):
            f = f * ctx.minor(range(0, l), range(r - l, r))
        return f
    if fam == SKEW:
        r = shape.r
        b = r // 2
        if not (1 <= u <= b):
            raise ValueError("u out of range")
        for l in range(u, b):
            f = f * ctx.pfaffian(range(0, 2 * l))
            f = f * ctx.pfaffian(
                tuple(range(0, l)) + tuple(range(l + 1, 2 * l + 1))
            )
            f = f * ctx.pfaffian(range(r - 2 * l, r))
            f = f * ctx.pfaffian(
                tuple(range(r - 2 * l - 1, r - l - 1))
                + tuple(range(r - l, r))
            )
        if r % 2:
            f = f * ctx.pfaffian(range(0, r - 1))
            f = f * ctx.pfaffian(range(1, r))
            f = f * ctx.pfaffian(tuple(range(0, b)) + tuple(range(b + 1, r)))
        else:
            f = f * ctx.pfaffian(range(0, r))
        return f
    # hankel
    c = shape.c
    m = (c + 1) // 2
    if not (1 <= u <= m):
        raise ValueError("u out of range")
    if c % 2:
        f = ctx.minor(range(0, m), range(0, m))
        f = f * ctx.minor(range(1, m), range(0, m - 1))
    else:
        f = ctx.minor(range(0, m), range(0, m))
        f = f * ctx.minor(range(0, m), range(1, m + 1))
    return f


def _minimal_weight_tuples(weights, n):
    """Exponent tuples a with sum(w_i a_i) >= n, minimal in product order."""
    if n <= 0:
        return [tuple(0 for _ in weights)]
    caps = [-(-n // w) for w in weights]
    out = []
    for a in itertools.product(*(range(c + 1) for c in caps)):
        total = sum(w * x for w, x in zip(weights, a))
        if total < n:
            continue
        if all(x == 0 or total - w < n for w, x in zip(weights, a)):
            out.append(a)
    return out


def symbolic_tuple_data(spec):
    """(block sizes j, filtration weights j-t+1, generator degrees)."""
    sh, t = spec.shape, spec.t
    top = (
        sh.r // 2
        if sh.family == SKEW
        else ((sh.c + 1) // 2 if sh.family == HANKEL else sh.r)
    )
    sizes = list(range(t, top + 1))
    weights = [j - t + 1 for j in sizes]
    degrees = list(sizes)  # j-minors and 2j-Pfaffians both have degree j
    return sizes, weights, degrees


def symbolic_power(spec, n, p=2, ctx=None, minimalize=False,
                   max_pairs=DEFAULT_MAX_PAIRS):
    """I_t^{(n)} from the generators of the symbolic Rees algebra.

    The symbolic Rees algebra is generated by the blocks I_j at T-degree
    j - t + 1, so the n-th piece is the sum of the products prod_j I_j^{a_j}
    over exponent tuples with sum (j-t+1) a_j >= n (minimal tuples only;
    the rest are redundant).
    """
    if n < 0:
        raise ValueError("negative symbolic power")
    ctx = ctx or context(spec.shape, p)
    if n == 0:
        return Ideal.unit(ctx.ring)
    sizes, weights, _ = symbolic_tuple_data(spec)
    gens = []
    seen = set()
    for a in _minimal_weight_tuples(weights, n):
        blocks = []
        for j, e in zip(sizes, a):
            if e:
                blocks.append((ctx.block_ideal(j).gens, e))
        per_block = [
            list(itertools.combinations_with_replacement(bg, e))
            for bg, e in blocks
        ]
        for choice in itertools.product(*per_block):
            g = Polynomial.constant(ctx.ring, 1)
            for multiset in choice:
                for h in multiset:
                    g = g * h
            if g.terms not in seen:
                seen.add(g.terms)
                gens.append(g)
    out = Ideal(ctx.ring, gens)
    if minimalize:
        out = Ideal(ctx.ring, out.mingens(max_pairs=max_pairs))
    return out


def symbolic_power_oracle(spec, n, p=2, ctx=None, max_pairs=DEFAULT_MAX_PAIRS):
    """Independent brute-force oracle: I^n : delta^infinity.

    delta is the top-left (t-1)-minor (resp. (2t-2)-Pfaffian), which lies
    outside I but inside every larger determinantal prime, hence in every
    embedded prime of I^n for these families.
    """
    if spec.t < 2:
        raise ValueError("oracle needs t >= 2 (t = 1 is trivially ordinary)")
    ctx = ctx or context(spec.shape, p)
    if n == 0:
        return Ideal.unit(ctx.ring)
    I = ctx.block_ideal(spec.t)
    if spec.shape.family == SKEW:
        delta = ctx.pfaffian(range(0, 2 * spec.t - 2))
    else:
        delta = ctx.minor(range(0, spec.t - 1), range(0, spec.t - 1))
    return saturation(I.power(n), delta, max_pairs=max_pairs)


def ordinary_power_intersection(spec, n, p=2, ctx=None,
                                max_pairs=DEFAULT_MAX_PAIRS):
    """cap_{l=1..t} (l-th block ideal)^{((t-l+1) n)} (symbolic powers).

    By the family intersection formulas this equals I_t^n.
    """
    ctx = ctx or context(spec.shape, p)
    if n == 0:
        return Ideal.unit(ctx.ring)
    parts = []
    for l in range(1, spec.t + 1):
        sub = DetIdealSpec(spec.shape, l)
        parts.append(symbolic_power(sub, (spec.t - l + 1) * n, ctx=ctx))
    return ideal_intersection_many(parts, max_pairs=max_pairs)


# -- binomial edge ideals -------------------------------------------------


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset

    @staticmethod
    def on(n, edges):
        norm = set()
        for a, b in edges:
            if a == b:
                raise ValueError("loops are not allowed")
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError("vertex out of range")
            norm.add((min(a, b), max(a, b)))
        return Graph(n, frozenset(norm))

    @staticmethod
    def path(n):
        return Graph.on(n, [(i, i + 1) for i in range(1, n)])

    @staticmethod
    def cycle(n):
        edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
        return Graph.on(n, edges)


def edge_ring(G, p):
    names = [f"x{i}" for i in range(1, G.n + 1)] + [
        f"y{i}" for i in range(1, G.n + 1)
    ]
    return RingContext(p, names, order=MonomialOrder.lex(range(2 * G.n)))


def edge_binomial(ring, G, i, j):
    n = G.n
    xi = Polynomial.variable(ring, i - 1)
    yi = Polynomial.variable(ring, n + i - 1)
    xj = Polynomial.variable(ring, j - 1)
    yj = Polynomial.variable(ring, n + j - 1)
    return xi * yj - xj * yi


def binomial_edge_ideal(G, p=2, ring=None):
    ring = ring or edge_ring(G, p)
    gens = [edge_binomial(ring, G, i, j) for (i, j) in sorted(G.edges)]
    return Ideal(ring, gens)


def is_closed(G):
    """Edge-pair condition for the identity labeling."""
    for (i, j) in G.edges:
        for (k, l) in G.edges:
            if (i, j) == (k, l):
                continue
            if i == k and j != l:
                if (min(j, l), max(j, l)) not in G.edges:
                    return False
            if j == l and i != k:
                if (min(i, k), max(i, k)) not in G.edges:
                    return False
    return True


def path_witness(G, path, p=2, ring=None):
    """Product of the edge binomials along an explicit Hamiltonian path."""
    if sorted(path) != list(range(1, G.n + 1)):
        raise ValueError("path is not Hamiltonian")
    for a, b in zip(path, path[1:]):
        if (min(a, b), max(a, b)) not in G.edges:
            raise ValueError(f"path edge ({a},{b}) not in the graph")
    ring = ring or edge_ring(G, p)
    f = Polynomial.constant(ring, 1)
    for a, b in zip(path, path[1:]):
        f = f * edge_binomial(ring, G, a, b)
    return f
