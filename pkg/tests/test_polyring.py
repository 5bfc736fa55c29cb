from fractions import Fraction

import pytest

from coxpres.collineation import (Params, cox_presentation, pullback_map,
                                  segre_map, weight_matrices)
from coxpres.intlinalg import IntMatrix
from coxpres.polyring import (GREVLEX, LEX, EliminationBlock, Grading,
                              PolyRing, RingMap, multidegree)


@pytest.fixture
def xy():
    return PolyRing(("x", "y"))


def test_add_cancels(xy):
    x, y = xy.gens()
    assert (x + y) + (-x) == y


def test_product_of_conjugates(xy):
    x, y = xy.gens()
    assert (x - y) * (x + y) == x * x - y * y


def test_product_with_last_variable():
    ring = cox_presentation(Params(3, 3)).ring
    f = ring.parse("T_1_3*T_2_4") * ring.var("Tinf")
    assert f == ring.parse("Tinf*T_1_3*T_2_4")
    # Tinf is the largest variable, so it leads the term ordering
    assert f.leading_exps()[ring.index["Tinf"]] == 1


def test_mismatched_rings_raise(xy):
    other = PolyRing(("x", "z"))
    with pytest.raises(ValueError):
        xy.var("x") + other.var("z")


def test_pullback_image_of_plus_block_variable():
    phi = pullback_map(Params(3, 3))
    t12 = phi.source.var("T_1_2")
    assert phi(t12) == phi.target.parse("Tinf*T_1_2")


def test_segre_image_of_mixed_variable():
    sigma = segre_map(Params(3, 3))
    assert sigma(sigma.source.var("T_1_4")) == sigma.target.parse("S_1*S_4")


def test_identity_map(xy):
    ident = RingMap(xy, xy, xy.gens())
    f = xy.parse("x^2*y - 3*y + 1")
    assert ident(f) == f


def test_multidegree_of_split_relation():
    p = Params(3, 3)
    pres = cox_presentation(p)
    _, qinf = weight_matrices(p)
    f = pres.ring.parse("Tinf*T_1_2*T_4_5 - T_1_4*T_2_5 + T_1_5*T_2_4")
    # oracle: sum the degree columns of one term by hand
    cols = [qinf.col(pres.ring.index[n]) for n in ("Tinf", "T_1_2", "T_4_5")]
    expected = tuple(sum(c[r] for c in cols) for r in range(3))
    assert expected == (2, 0, 0)
    assert multidegree(f, pres.grading) == expected


def test_multidegree_inhomogeneous():
    p = Params(3, 3)
    pres = cox_presentation(p)
    f = pres.ring.parse("T_1_2 + T_4_5")
    assert multidegree(f, pres.grading) is None


def test_multidegree_constant_and_zero():
    ring = PolyRing(("x",))
    grading = Grading(IntMatrix.from_cols([(1, 2)]))
    assert multidegree(ring.one(), grading) == (0, 0)
    with pytest.raises(ValueError):
        multidegree(ring.zero(), grading)


def test_multidegree_additive_on_products():
    ring = PolyRing(("x", "y", "z"))
    grading = Grading(IntMatrix.from_cols([(1, 0), (0, 1), (1, 1)]))
    f = ring.parse("x*z + x^2*y")
    g = ring.parse("y*z")
    df, dg = multidegree(f, grading), multidegree(g, grading)
    assert df is not None and dg is not None
    assert multidegree(f * g, grading) == tuple(a + b for a, b in zip(df, dg))


def test_parse_round_trip():
    ring = PolyRing(("T_1_2", "T_3_4", "Tinf"))
    f = ring.parse("2*T_1_2^3*Tinf - T_3_4 + 5")
    assert ring.parse(str(f)) == f
    assert ring.parse("-T_1_2 + T_1_2") == ring.zero()


def test_parse_rejects_unknown_variable(xy):
    with pytest.raises(ValueError):
        xy.parse("x + q")


def test_order_keys_are_orders():
    e1, e2, e3 = (2, 0, 0), (0, 1, 1), (1, 1, 0)
    for order in (GREVLEX, LEX, EliminationBlock(1)):
        k = order.key
        assert len({k(e1), k(e2), k(e3)}) == 3
        # divisibility refinement
        assert k((0, 1, 0)) < k((1, 1, 0)) and k((1, 1, 0)) < k((1, 2, 0))


def test_grevlex_last_variable_largest():
    ring = PolyRing(("a", "b"))
    f = ring.parse("a + b")
    assert f.leading_exps() == (0, 1)


def test_elimination_block_beats_degree():
    # any power of the eliminated variable outranks the rest
    order = EliminationBlock(1)
    assert order.key((1, 0, 0)) > order.key((0, 9, 9))


def test_evaluate():
    ring = PolyRing(("x", "y"))
    f = ring.parse("x^2*y - 2*y + 7")
    assert f.evaluate({"x": Fraction(2), "y": Fraction(3)}) == 12 - 6 + 7
    assert f.evaluate({}) == 7
