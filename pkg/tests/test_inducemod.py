from fractions import Fraction as F

import pytest

from weightcat.degonemod import build_M, build_N
from weightcat.inducemod import (DepthOverflowError, NonScalarActionError, central_scalars,
                                 induce, levi_module, levi_module_product,
                                 probe_restriction_failure, restrict_family, u0_compare)
from weightcat.rootsys import build_root_system


def neg(r):
    return tuple(-x for x in r)


@pytest.fixture
def a2_setup():
    rs = build_root_system("A2")
    a1, a2 = F(1, 2), F(1, 3)
    C = levi_module(rs, [1], build_N([a1, a2]), {2: a2})  # branch c = 0
    return rs, a1, a2, C


def test_nilradical_kills_base(a2_setup):
    rs, a1, a2, C = a2_setup
    V = induce(C, 3)
    for root in V.ideal_pos:
        assert V.act_root(root, V.one_tensor()) == {}


def test_levi_acts_through_inner_module(a2_setup):
    rs, a1, a2, C = a2_setup
    V = induce(C, 3)
    e1 = rs.simple_root(1)
    got = V.act_root(neg(e1), V.one_tensor())
    assert got == {((), (-1, 1)): a1}


def test_bracket_through_monomial(a2_setup):
    rs, a1, a2, C = a2_setup
    V = induce(C, 3)
    ab = tuple(x + y for x, y in zip(rs.simple_root(1), rs.simple_root(2)))
    v = V.monomial_tensor([neg(ab)], (0, 0))
    out = V.act_root(ab, v)
    # bracket lands in the Cartan: a scalar multiple of the base vector
    assert list(out) == [((), (0, 0))]


def test_project_nonzero_and_linear(a2_setup):
    rs, a1, a2, C = a2_setup
    V = induce(C, 3)
    one = V.one_tensor()
    assert V.project(one) == one
    beta = rs.simple_root(2)
    w = V.monomial_tensor([neg(beta)], (0, 0))
    pw = V.project(w)
    assert pw
    two = {k: 2 * c for k, c in w.items()}
    assert V.project(two) == {k: 2 * c for k, c in pw.items()}
    assert V.project(V.project(w)) == pw  # idempotent


def test_lemma_eta_ratio_and_kernel_membership(a2_setup):
    rs, a1, a2, C = a2_setup
    V = induce(C, 3)
    alpha, beta = rs.simple_root(1), rs.simple_root(2)
    ab = tuple(x + y for x, y in zip(alpha, beta))
    for k in (-1, 0, 1, 2):
        v = V.monomial_tensor([neg(ab)], (k, -k))
        w = V.monomial_tensor([neg(beta)], (k - 1, -(k - 1)))
        assert V.proportionality(v, w) == (a1 + k) / (a2 - k + 1)
    # X_{e2} image of the first vector hits the lowered base vector, so the
    # projection cannot vanish
    assert V.project(V.monomial_tensor([neg(ab)], (0, 0)))


def test_proportionality_edges(a2_setup):
    rs, a1, a2, C = a2_setup
    V = induce(C, 3)
    beta = rs.simple_root(2)
    w = V.monomial_tensor([neg(beta)], (0, 0))
    v3 = {k: 3 * c for k, c in w.items()}
    assert V.proportionality(v3, w) == 3
    with pytest.raises(ValueError):
        V.proportionality(w, {})
    # independent vectors at different weights
    other = V.monomial_tensor([neg(beta)], (1, -1))
    assert V.proportionality(other, w) is None


def test_depth_overflow_reported(a2_setup):
    rs, a1, a2, C = a2_setup
    V = induce(C, 1)
    beta = rs.simple_root(2)
    v = V.monomial_tensor([neg(beta)], (0, 0))
    with pytest.raises(DepthOverflowError):
        V.act_root(neg(beta), v)


def test_kernel_depth_stability(a2_setup):
    rs, a1, a2, C = a2_setup
    alpha, beta = rs.simple_root(1), rs.simple_root(2)
    ab = tuple(x + y for x, y in zip(alpha, beta))
    mu = None
    for depth in (2, 3):
        V = induce(C, depth)
        v = V.monomial_tensor([neg(ab)], (0, 0))
        mu = V.weight_of(v)
        rows, pivots, basis = V.kernel_data(mu)
        # the weight needs monomials of depth <= 1 only, so both runs agree
        assert len(basis) == 2 and len(rows) == 1


def test_central_scalars(a2_setup):
    rs, a1, a2, C = a2_setup
    scal = central_scalars(C, [(0, 0), (1, -1), (-2, 2)])
    (z, val), = scal.items()
    assert val == z[0] * (a1 - a2) + z[1] * a2  # c = 0 branch
    # values do not depend on the sample set
    assert central_scalars(C, [(5, -5)]) == scal
    assert central_scalars(C, [(-3, 3), (2, -2), (7, -7)]) == scal
    with pytest.raises(ValueError):
        central_scalars(C, [])
    # the non-constant guard trips on a corrupted weight cache
    Cbad = levi_module(rs, [1], build_N([a1, a2]), {2: a2})
    w = list(Cbad.weight_of((1, -1)))
    w[1] += 1
    Cbad._wcache[(1, -1)] = tuple(w)
    with pytest.raises(NonScalarActionError):
        central_scalars(Cbad, [(0, 0), (1, -1)])


def test_u0_compare_cor_isomorphism(a2_setup):
    rs, a1, a2, C = a2_setup
    V = induce(C, 5)
    assert u0_compare(V, V.one_tensor(), build_N([a1, a2, 0]), (0, 0, 0), depth=4)
    # the other branch matches the reflected parameters
    Cm = levi_module(rs, [1], build_N([a1, a2]), {2: -1 - a1 - a2 + a2})
    Vm = induce(Cm, 5)
    assert u0_compare(Vm, Vm.one_tensor(), build_N([-1 - a2, -1 - a1, 0]), (0, 0, 0), depth=4)
    assert not u0_compare(V, V.one_tensor(), build_N([a1, F(1, 5), 0]), (0, 0, 0), depth=4)
    assert u0_compare(V, V.one_tensor(), V, V.one_tensor(), depth=3)


def test_restrict_family_roundtrip():
    fam = build_N(["-1", "1/2", "1/3", "0"])
    C = restrict_family(fam)
    assert C.block == (2,)
    V = induce(C, 4)
    assert u0_compare(V, V.one_tensor(), fam, (0, 0, 0, 0), depth=3)
    famc = build_M(["-1", "1/4", "1/5"])
    Cc = restrict_family(famc)
    assert Cc.block == (2, 3)
    Vc = induce(Cc, 3)
    assert u0_compare(Vc, Vc.one_tensor(), famc, (0, 0, 0), depth=3)


def test_probe_restriction_failure_cases():
    c2 = build_root_system("C2")
    short_block = levi_module(c2, [1], build_N([F(1, 4), F(1, 7)]), {2: F(2, 3)})
    rep = probe_restriction_failure(short_block, depth=3)
    assert rep.restriction_impossible and rep.witness is not None

    a2 = build_root_system("A2")
    fine = levi_module(a2, [1], build_N([F(1, 2), F(1, 3)]), {2: F(1, 3)})
    assert probe_restriction_failure(fine, depth=3).restriction_impossible is False

    long_ok = levi_module(c2, [2], build_N([F(1, 4), F(-3, 4)]), {1: 2 * F(-3, 4)})
    assert probe_restriction_failure(long_ok, depth=3).restriction_impossible is False


def test_probe_disconnected_block():
    a3 = build_root_system("A3")
    C = levi_module_product(
        a3,
        [((1,), build_N([F(1, 2), F(1, 3)])), ((3,), build_N([F(1, 5), F(1, 7)]))],
        {2: F(3, 7)})
    rep = probe_restriction_failure(C, depth=3)
    assert rep.restriction_impossible


def test_probe_trivial_c3_cases():
    c3 = build_root_system("C3")
    # single short root blocks and the size-two type A block are all obstructed
    for block, central in ([(1,), {2: F(1, 5), 3: F(1, 7)}],
                           [(2,), {1: F(1, 5), 3: F(1, 7)}]):
        C = levi_module(c3, block, build_N([F(1, 2), F(1, 3)]), central)
        assert probe_restriction_failure(C, depth=3).restriction_impossible, block
    C = levi_module(c3, [1, 2], build_N([F(1, 2), F(1, 3), F(1, 5)]), {3: F(1, 7)})
    assert probe_restriction_failure(C, depth=3).restriction_impossible
