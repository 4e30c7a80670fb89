from fractions import Fraction as F

import pytest

from weightcat.weylmod import (WeylParams, WeylPolynomial, act_monomial, check_weyl_relations,
                               format_rational, k_member, lattice_window, parse_rational,
                               transitivity_probe, weyl_act)


def test_rational_io():
    assert parse_rational("-3/7") == F(-3, 7)
    assert parse_rational("4") == F(4)
    assert format_rational(F(5, 1)) == "5"
    assert format_rational(F(-2, 6)) == "-1/3"


def test_polynomial_defining_relations():
    one = WeylPolynomial.constant(2, 1)
    q1 = WeylPolynomial.monomial(2, (1, 0), (0, 0))
    p1 = WeylPolynomial.monomial(2, (0, 0), (1, 0))
    q2 = WeylPolynomial.monomial(2, (0, 1), (0, 0))
    p2 = WeylPolynomial.monomial(2, (0, 0), (0, 1))
    assert p1.commutator(q1) == one
    assert p1.commutator(q2).is_zero()
    assert q1.commutator(q2).is_zero()
    # the rank-one quadratic pair brackets to a diagonal plus a constant
    half_q2 = q1 * q1
    half_p2 = p1 * p1
    qp = WeylPolynomial.monomial(2, (1, 0), (1, 0))
    got = half_q2.scale(F(1, 2)).commutator(half_p2.scale(F(-1, 2)))
    assert got == qp + WeylPolynomial.constant(2, F(1, 2))


def test_k_member_examples():
    assert k_member(WeylParams.of(["-1"]), (0,)) is True
    assert k_member(WeylParams.of(["-1"]), (1,)) is False
    assert k_member(WeylParams.of(["1/2"]), (-7,)) is True
    assert k_member(WeylParams.of(["0"]), (-1,)) is False


def test_weyl_act_branches():
    neg = WeylParams.of(["-1"])
    t = weyl_act(("q", 0), neg, (-2,))
    assert (t.coeff, t.target) == (F(-2), (-1,))
    half = WeylParams.of(["1/2"])
    t = weyl_act(("p", 0), half, (0,))
    assert (t.coeff, t.target) == (F(1, 2), (-1,))
    # boundary annihilation: the raising coefficient vanishes exactly at the edge
    t = weyl_act(("q", 0), neg, (0,))
    assert t.coeff == 0
    m2 = WeylParams.of(["-2"])
    t = weyl_act(("q", 0), m2, (1,))
    assert t.coeff == 0
    t = weyl_act(("q", 0), m2, (0,))
    assert t.coeff == F(-1) and t.target == (1,)
    with pytest.raises(ValueError):
        weyl_act(("q", 0), neg, (5,))


@pytest.mark.parametrize("avals,radius", [
    (["1/2", "1/3"], 3),
    (["-1", "0"], 3),
    (["-1"], 4),
    (["-2", "1/5", "0"], 2),
])
def test_defining_relations_on_window(avals, radius):
    assert check_weyl_relations(WeylParams.of(avals), radius) == []


def test_monomial_action_composes():
    params = WeylParams.of(["1/2", "1/3"])
    t = act_monomial(params, (1, 0), (0, 1), (0, 0))  # q1 p2
    assert (t.coeff, t.target) == (F(1, 3), (1, -1))


@pytest.mark.parametrize("avals,radius", [
    (["1/2"], 2),
    (["-1"], 2),
    (["1/2", "-1"], 2),
])
def test_transitivity(avals, radius):
    assert transitivity_probe(WeylParams.of(avals), radius) is True


def test_injectivity_for_non_integer_parameters():
    params = WeylParams.of(["1/2", "-3/7"])
    for k in lattice_window(params, 3):
        for i in range(2):
            for kind in ("q", "p"):
                assert weyl_act((kind, i), params, k).coeff != 0
