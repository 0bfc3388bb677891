import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fpure.poly import (
    Polynomial,
    initial_term,
    poly_arith,
    pth_root_splitting_image,
)
from fpure.ring import MonomialOrder, RingContext

from conftest import make_ring, poly, random_poly


def test_difference_of_squares():
    R = make_ring(5, ("x", "y"))
    f = poly(R, "x+y")
    g = poly(R, "x-y")
    assert f * g == poly(R, "x^2 - y^2")


def test_mul_by_zero_absorbs():
    R = make_ring(5, ("x", "y"))
    f = poly(R, "3x^2y + x - 1")
    assert (f * Polynomial.zero(R)).is_zero()


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_freshman_dream(p):
    R = make_ring(p, ("x", "y"))
    f = poly(R, "x+y")
    assert f ** p == poly(R, f"x^{p} + y^{p}")


@given(st.integers(0, 2**32 - 1), st.sampled_from([2, 3, 5]))
@settings(max_examples=60, deadline=None)
def test_frobenius_additive_on_random_pairs(seed, p):
    rng = random.Random(seed)
    R = make_ring(p, ("x", "y", "z"))
    f = random_poly(R, rng)
    g = random_poly(R, rng)
    assert (f + g) ** p == f ** p + g ** p


def test_mixed_rings_rejected():
    R1 = make_ring(5, ("x", "y"))
    R2 = make_ring(7, ("x", "y"))
    with pytest.raises(ValueError):
        poly_arith(poly(R1, "x"), poly(R2, "x"), "add")


def test_initial_term_generic_2x2_under_row_major_lex():
    # diagonal beats antidiagonal for the 2-minor under row-major lex
    names = ("x11", "x12", "x21", "x22")
    R = RingContext(5, names, order=MonomialOrder.lex((0, 1, 2, 3)))
    f = poly(R, "x11*x22 - x12*x21")
    c, e = initial_term(f)
    assert e == (1, 0, 0, 1)
    assert c == 1


def test_initial_term_of_constant_and_zero():
    R = make_ring(5, ("x",))
    c, e = initial_term(poly(R, "3"))
    assert (c, e) == (3, (0,))
    with pytest.raises(ValueError):
        initial_term(Polynomial.zero(R))


def test_outside_frobenius_max():
    R = make_ring(3, ("x", "y", "z"))
    assert poly(R, "x").outside_frobenius_max()
    assert not poly(R, "x^3").outside_frobenius_max()
    assert poly(R, "(x*y*z)^2").outside_frobenius_max()
    # invariance under scaling by a unit
    f = poly(R, "x^3*y + 2*x*y^2")
    for c in (1, 2):
        assert f.scale(c).outside_frobenius_max() == f.outside_frobenius_max()


def test_pth_root_splitting_image():
    R = make_ring(2, ("x", "y"))
    assert pth_root_splitting_image(R, (2, 4)) == (1, 2)
    assert pth_root_splitting_image(R, (3, 0)) is None
    assert pth_root_splitting_image(R, (0, 0)) == (0, 0)


def test_weighted_degrees_and_homogeneity():
    R = RingContext(3, ("a", "b", "c", "d"), weights=(1, 2, 2, 2))
    f = poly(R, "a^4 - b*c")
    assert f.is_homogeneous()
    assert f.wdeg() == 4


def test_pow_matches_repeated_multiplication():
    rng = random.Random(7)
    R = make_ring(3, ("x", "y"))
    for _ in range(20):
        f = random_poly(R, rng)
        acc = Polynomial.constant(R, 1)
        for k in range(6):
            assert f ** k == acc
            acc = acc * f


def test_substitute_ring_map():
    R = make_ring(5, ("x", "y"))
    S = make_ring(5, ("u",))
    f = poly(R, "x^2 + x*y")
    image = f.substitute(S, [poly(S, "u"), poly(S, "u^2")])
    assert image == poly(S, "u^2 + u^3")


def test_grevlex_vs_lex_leading_terms():
    weights = (1, 1)
    Rg = RingContext(5, ("x", "y"), order=MonomialOrder.grevlex(weights))
    Rl = RingContext(5, ("x", "y"), order=MonomialOrder.lex((0, 1)))
    f = "x + y^3"
    assert initial_term(poly(Rg, f))[1] == (0, 3)  # degree wins
    assert initial_term(poly(Rl, f))[1] == (1, 0)  # x wins lex
