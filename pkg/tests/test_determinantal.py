import itertools

import pytest

from fpure.determinantal import (
    DetIdealSpec,
    Graph,
    MatrixShape,
    binomial_edge_ideal,
    build_matrix,
    context,
    height,
    is_closed,
    minors_ideal,
    minors_ideal_of_shape_matrix,
    ordinary_power_intersection,
    paper_order,
    path_witness,
    symbolic_power,
    symbolic_power_oracle,
    witness_polynomial,
)
from fpure.groebner import Ideal, ideal_equal, krull_dimension, minimal_generators
from fpure.poly import Polynomial, initial_term


def test_build_generic_2x2():
    shape = MatrixShape.generic(2, 2)
    ctx = context(shape, 5)
    M = ctx.matrix
    assert [[repr(e) for e in row] for row in M] == [
        ["x11", "x12"],
        ["x21", "x22"],
    ]


def test_build_skew_2x2():
    shape = MatrixShape.skew(2)
    ctx = context(shape, 5)
    M = ctx.matrix
    assert M[0][0].is_zero() and M[1][1].is_zero()
    assert M[1][0] == -M[0][1]
    assert repr(M[0][1]) == "z12"


def test_build_hankel_2_of_3():
    shape = MatrixShape.hankel(2, 3)
    M = build_matrix(shape, p=5)
    assert [[repr(e) for e in row] for row in M] == [
        ["w1", "w2"],
        ["w2", "w3"],
    ]


def test_paper_order_generic_row_major():
    shape = MatrixShape.generic(2, 2)
    assert paper_order(shape).ranking == (0, 1, 2, 3)


def test_paper_order_skew_descending_columns():
    shape = MatrixShape.skew(3)
    names = shape.var_names()  # z12, z13, z23
    order = paper_order(shape)
    ranked = [names[i] for i in order.ranking]
    assert ranked == ["z13", "z12", "z23"]


def test_pfaffian_2x2_and_4x4():
    ctx = context(MatrixShape.skew(4), 5)
    assert repr(ctx.pfaffian((0, 1))) == "z12"
    pf4 = ctx.pfaffian((0, 1, 2, 3))
    ring = ctx.ring
    names = {n: i for i, n in enumerate(ring.names)}

    def v(nm):
        return Polynomial.variable(ring, names[nm])

    expected = v("z12") * v("z34") - v("z13") * v("z24") + v("z14") * v("z23")
    assert pf4 == expected


@pytest.mark.parametrize("r", [2, 3, 4, 5, 6])
def test_pf_squared_is_det(r):
    ctx = context(MatrixShape.skew(r), 7)
    for size in range(2, r + 1, 2):
        for idx in itertools.combinations(range(r), size):
            pf = ctx.pfaffian(idx)
            det = ctx.minor(idx, idx)
            assert pf * pf == det


def test_minors_ideal_2x3_has_three_binomials():
    spec = DetIdealSpec(MatrixShape.generic(2, 3), 2)
    I = minors_ideal(spec, p=5)
    assert len(I.gens) == 3
    assert all(len(g.terms) == 2 for g in I.gens)


def test_minor_count_generic_3x3():
    spec = DetIdealSpec(MatrixShape.generic(3, 3), 2)
    I = minors_ideal(spec, p=2)
    _, mu = minimal_generators(I)
    assert mu == 9


def test_minimal_generator_count_pfaffian_5():
    spec = DetIdealSpec(MatrixShape.skew(5), 2)
    I = minors_ideal(spec, p=2)
    _, mu = minimal_generators(I)
    assert mu == 5


def test_heights():
    assert height(DetIdealSpec(MatrixShape.generic(3, 3), 2)) == 4
    assert height(DetIdealSpec(MatrixShape.skew(5), 2)) == 3
    assert height(DetIdealSpec(MatrixShape.hankel(2, 4), 2)) == 2
    assert height(DetIdealSpec(MatrixShape.symmetric(3), 2)) == 3


def test_height_matches_krull_dimension():
    cases = [
        DetIdealSpec(MatrixShape.generic(2, 3), 2),
        DetIdealSpec(MatrixShape.generic(3, 3), 2),
        DetIdealSpec(MatrixShape.skew(5), 2),
        DetIdealSpec(MatrixShape.hankel(2, 4), 2),
        DetIdealSpec(MatrixShape.hankel(3, 5), 2),
        DetIdealSpec(MatrixShape.symmetric(3), 2),
    ]
    for spec in cases:
        I = minors_ideal(spec, p=5)
        d = I.ring.nvars
        assert krull_dimension(I) == d - height(spec)


def test_witness_generic_3x3_top_is_determinant():
    shape = MatrixShape.generic(3, 3)
    ctx = context(shape, 5)
    f = witness_polynomial(shape, 3, ctx=ctx)
    assert f == ctx.minor(range(3), range(3))


def test_witness_symmetric_2():
    shape = MatrixShape.symmetric(2)
    ctx = context(shape, 5)
    f = witness_polynomial(shape, 1, ctx=ctx)
    names = {n: i for i, n in enumerate(ctx.ring.names)}
    y12 = Polynomial.variable(ctx.ring, names["y12"])
    assert f == y12 * ctx.minor((0, 1), (0, 1))


def test_witness_hankel_c3():
    shape = MatrixShape.hankel(2, 3)
    ctx = context(shape, 5)
    f = witness_polynomial(shape, 1, ctx=ctx)
    # det(W) * w2 with initial term w1 w3 w2
    _, e = initial_term(f)
    assert e == (1, 1, 1)


WITNESS_CASES = [
    (MatrixShape.generic(2, 2), [1, 2]),
    (MatrixShape.generic(2, 3), [1, 2]),
    (MatrixShape.generic(3, 3), [1, 2, 3]),
    (MatrixShape.generic(3, 4), [1, 2, 3]),
    (MatrixShape.generic(4, 4), [1, 2, 3, 4]),
    (MatrixShape.symmetric(2), [1, 2]),
    (MatrixShape.symmetric(3), [1, 2, 3]),
    (MatrixShape.symmetric(4), [1, 2, 3, 4]),
    (MatrixShape.skew(4), [1, 2]),
    (MatrixShape.skew(5), [1, 2]),
    (MatrixShape.skew(6), [1, 2, 3]),
    (MatrixShape.skew(7), [1, 2, 3]),
    (MatrixShape.hankel(2, 3), [1]),
    (MatrixShape.hankel(2, 4), [1, 2]),
    (MatrixShape.hankel(3, 5), [1]),
    (MatrixShape.hankel(3, 6), [1, 2]),
    (MatrixShape.hankel(4, 7), [1]),
]


@pytest.mark.parametrize("shape,us", WITNESS_CASES)
def test_witness_initial_terms_squarefree(shape, us):
    ctx = context(shape, 5)
    for u in us:
        f = witness_polynomial(shape, u, ctx=ctx)
        _, e = initial_term(f)
        assert all(x <= 1 for x in e), (shape, u, e)


def test_symbolic_power_n1_is_the_ideal():
    for shape, t in [
        (MatrixShape.generic(3, 3), 2),
        (MatrixShape.skew(5), 2),
        (MatrixShape.hankel(2, 4), 2),
    ]:
        spec = DetIdealSpec(shape, t)
        assert ideal_equal(symbolic_power(spec, 1, p=2), minors_ideal(spec, p=2))


def test_symbolic_square_generic_3x3_adds_determinant():
    spec = DetIdealSpec(MatrixShape.generic(3, 3), 2)
    ctx = context(spec.shape, 5)
    S2 = symbolic_power(spec, 2, ctx=ctx)
    det = ctx.minor(range(3), range(3))
    I = minors_ideal(spec, ctx=ctx)
    expected = I.power(2) + Ideal(ctx.ring, (det,))
    assert ideal_equal(S2, expected)
    # and the determinant witnesses strictness
    assert not I.power(2).contains(det)


def test_symbolic_square_skew5_is_ordinary_square():
    spec = DetIdealSpec(MatrixShape.skew(5), 2)
    ctx = context(spec.shape, 5)
    S2 = symbolic_power(spec, 2, ctx=ctx)
    assert ideal_equal(S2, minors_ideal(spec, ctx=ctx).power(2))


def test_symbolic_power_matches_oracle_generic():
    spec = DetIdealSpec(MatrixShape.generic(3, 3), 2)
    ctx = context(spec.shape, 5)
    for n in (1, 2):
        lhs = symbolic_power(spec, n, ctx=ctx)
        rhs = symbolic_power_oracle(spec, n, ctx=ctx)
        assert ideal_equal(lhs, rhs), n


def test_symbolic_power_matches_oracle_hankel():
    spec = DetIdealSpec(MatrixShape.hankel(2, 5), 2)
    ctx = context(spec.shape, 5)
    for n in (1, 2):
        assert ideal_equal(
            symbolic_power(spec, n, ctx=ctx),
            symbolic_power_oracle(spec, n, ctx=ctx),
        )


def test_oracle_rejects_t1():
    with pytest.raises(ValueError):
        symbolic_power_oracle(DetIdealSpec(MatrixShape.generic(2, 2), 1), 2)


def test_ordinary_power_intersection_generic_2x3():
    spec = DetIdealSpec(MatrixShape.generic(2, 3), 2)
    ctx = context(spec.shape, 5)
    I = minors_ideal(spec, ctx=ctx)
    for n in (1, 2):
        assert ideal_equal(
            ordinary_power_intersection(spec, n, ctx=ctx), I.power(n)
        )


def test_ordinary_power_intersection_t1_gives_powers_of_m():
    spec = DetIdealSpec(MatrixShape.generic(2, 2), 1)
    ctx = context(spec.shape, 3)
    m = ctx.block_ideal(1)
    for n in (1, 2):
        assert ideal_equal(
            ordinary_power_intersection(spec, n, ctx=ctx), m.power(n)
        )


def test_hankel_ideal_independent_of_shape_j():
    for c, t in [(4, 2), (5, 2), (6, 2), (6, 3)]:
        base = None
        for j in range(t, c + 2 - t):
            spec = DetIdealSpec(MatrixShape.hankel(j, c), t)
            I = minors_ideal_of_shape_matrix(spec, p=3)
            if base is None:
                base = I
            else:
                assert ideal_equal(base, I), (c, t, j)


def test_binomial_edge_path():
    G = Graph.path(3)
    I = binomial_edge_ideal(G, p=5)
    assert len(I.gens) == 2
    assert is_closed(G)


def test_four_cycle_not_closed():
    assert not is_closed(Graph.cycle(4))


def test_path_witness_and_validation():
    G = Graph.path(3)
    f = path_witness(G, [1, 2, 3], p=3)
    assert (f ** 2).outside_frobenius_max()
    with pytest.raises(ValueError):
        path_witness(G, [1, 3, 2], p=3)
    with pytest.raises(ValueError):
        path_witness(G, [1, 2], p=3)


def test_larger_minors_in_higher_symbolic_powers():
    spec = DetIdealSpec(MatrixShape.generic(3, 3), 2)
    ctx = context(spec.shape, 5)
    S2 = symbolic_power(spec, 2, ctx=ctx)
    I3 = ctx.block_ideal(3)
    assert S2.contains_ideal(I3)
