import random

import pytest

from fpure.parser import parse_poly, parse_ring
from fpure.poly import Polynomial
from fpure.ring import MonomialOrder, RingContext


@pytest.fixture
def ring_xy5():
    return RingContext(5, ("x", "y"), order=MonomialOrder.lex((0, 1)))


@pytest.fixture
def ring_xyz3():
    return RingContext(3, ("x", "y", "z"))


def make_ring(p, names, order_kind="grevlex"):
    weights = (1,) * len(names)
    if order_kind == "grevlex":
        order = MonomialOrder.grevlex(weights)
    else:
        order = MonomialOrder.lex(tuple(range(len(names))))
    return RingContext(p, names, weights, order)


def random_poly(ring, rng, max_terms=4, max_exp=3):
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        exps = tuple(rng.randint(0, max_exp) for _ in range(ring.nvars))
        coeff = rng.randint(1, ring.p - 1)
        terms.append((exps, coeff))
    return Polynomial(ring, terms)


def poly(ring, text):
    return parse_poly(ring, text)


def ring_of(text):
    r, _ = parse_ring(text)
    return r
