from fractions import Fraction as F

import pytest

from weightcat.degonemod import PartitionError, build_M, build_N


def neg(r):
    return tuple(-x for x in r)


# ---------------------------------------------------------------------------
# frozen action-table rows
# ---------------------------------------------------------------------------

def test_action_rows_type_A_middle_block():
    m = build_N(["1/2", "1/3", "0"])
    assert m.act_element(m.realization.coroot(2), (0, 0, 0)) == {(0, 0, 0): F(1, 3)}
    e1 = m.system.simple_root(1)
    assert m.act_root(neg(e1), (0, 0, 0)) == (F(1, 2), (-1, 1, 0))
    # raising with the middle coefficient
    assert m.act_root(e1, (0, 0, 0)) == (F(1, 3), (1, -1, 0))
    # zero-block coefficient vanishes on the base vector
    e2 = m.system.simple_root(2)
    assert m.act_root(e2, (0, 0, 0))[0] == 0
    assert m.act_root(e2, (1, -2, 1)) == (F(1), (1, -1, 0))


def test_action_rows_type_A_minus_one_block():
    m = build_N(["-1", "1/2", "1/3", "0"])
    e1 = m.system.simple_root(1)
    assert m.act_root(neg(e1), (0, 0, 0, 0)) == (F(1), (-1, 1, 0, 0))
    # k_j coefficient on the raising side
    assert m.act_root(e1, (0, 0, 0, 0))[0] == 0
    assert m.act_root(e1, (-1, 1, 0, 0)) == (-F(3, 2), (0, 0, 0, 0))
    # boundary Cartan row: -1 - a_{j+1} + k_j - k_{j+1}
    w = m.weight_of((0, 0, 0, 0))
    assert w[0] == -1 - F(1, 2)


def test_action_rows_type_C():
    m = build_M(["-1", "1/4"])
    assert m.act_element(m.realization.coroot(2), (0, 0)) == {(0, 0): F(3, 4)}
    e2 = m.system.simple_root(2)
    assert m.act_root(e2, (0, 0)) == (F(1, 2), (0, 2))
    assert m.act_root(neg(e2), (0, 2)) == (-F(45, 32), (0, 0))
    assert m.weight_of((0, 0)) == (-F(5, 4), F(3, 4))
    e1 = m.system.simple_root(1)
    assert m.act_root(neg(e1), (0, 0)) == (F(1), (-1, 1))


def test_partition_validation():
    with pytest.raises(PartitionError):
        build_N(["1", "2", "0"])
    with pytest.raises(PartitionError):
        build_N(["1/2", "0", "1/3"])
    with pytest.raises(PartitionError):
        build_N(["-1", "1/2", "0"])   # middle block too small
    with pytest.raises(PartitionError):
        build_M(["-1", "-3"])
    build_M(["-1", "-2"])             # allowed single integer tail
    build_M(["-1", "-1"])
    build_M(["1/3", "1/4"])           # cuspidal


def test_theta_blocks():
    assert build_N(["1/2", "1/3", "0", "0"]).cuspidal_block() == (1,)
    assert build_N(["1/2", "1/3", "0", "0"]).theta_a() == frozenset({2, 3})
    assert build_N(["-1", "1/2", "1/3", "0"]).cuspidal_block() == (2,)
    assert build_N(["1/2", "1/3", "1/5", "0"]).cuspidal_block() == (1, 2)
    assert build_M(["-1", "1/4"]).theta_a() == frozenset({1})
    assert build_M(["-1", "1/4", "1/5"]).cuspidal_block() == (2, 3)
    assert build_M(["1/4", "1/3"]).theta_a() == frozenset()


def test_weight_examples_and_injectivity():
    m = build_N(["1/2", "1/3", "0"])
    assert m.weight_of((0, 0, 0)) == (F(1, 6), F(1, 3))
    seen = {}
    for k in m.window(3):
        w = m.weight_of(k)
        assert w not in seen
        seen[w] = k
        assert m.index_of_weight(w) == k


@pytest.mark.parametrize("build,params,expected_count", [
    (build_N, ["1/2", "1/3", "0"], 5),
    (build_M, ["-1", "1/4"], 3),
])
def test_hw_enumeration_matches_prediction(build, params, expected_count):
    m = build(params)
    got = m.enumerate_hw(m.theta_a(), 2)
    assert got == m.predicted_hw(2)
    assert len(got) == expected_count


def test_hw_empty_theta_keeps_everything():
    m = build_N(["1/2", "1/3", "0"])
    assert m.enumerate_hw(frozenset(), 2) == m.window(2)


@pytest.mark.parametrize("build,params", [
    (build_N, ["1/2", "1/3", "0"]),
    (build_N, ["-1", "1/2", "1/3", "0"]),
    (build_N, ["1/2", "1/3", "1/5", "0"]),
    (build_M, ["-1", "1/4"]),
    (build_M, ["-1", "-1", "2/7"]),
    (build_M, ["1/4", "1/3"]),
    (build_M, ["-1", "-2"]),
])
def test_degree_is_one(build, params):
    m = build(params)
    for radius in (0, 2, 4):
        assert m.degree_on_window(radius) == 1


def test_weight_additivity():
    m = build_M(["-1", "1/4", "1/5"])
    for k in m.window(2):
        wk = m.weight_of(k)
        for root in m.system.roots:
            coeff, target = m.act_root(root, k)
            if coeff:
                wt = m.weight_of(target)
                shift = m.system.coroot_values(root)
                assert tuple(a + s for a, s in zip(wk, shift)) == wt


def test_local_nilpotency_outside_block():
    m = build_N(["-1", "1/2", "1/3", "0"])
    theta = m.theta_a()
    for b in theta:
        root = m.system.simple_root(b)
        for k in m.window(2):
            cur, alive = k, True
            for _ in range(20):
                c, cur = m.act_root(root, cur)
                if c == 0:
                    alive = False
                    break
            assert not alive


def test_levi_orbit_examples():
    m = build_N(["1/2", "1/3", "0"])
    rep = m.levi_orbit((0, 0, 0), radius=2)
    assert rep.cuspidal_ok and rep.return_paths_ok
    # two table rows composed: lowering after raising returns a nonzero multiple
    e1 = m.system.simple_root(1)
    c1, t1 = m.act_root(e1, (0, 0, 0))
    c2, t2 = m.act_root(neg(e1), t1)
    assert t2 == (0, 0, 0) and c1 * c2 == F(1, 3) * (F(1, 2) + 1)
    mc = build_M(["-1", "1/4"])
    e2 = mc.system.simple_root(2)
    c1, t1 = mc.act_root(e2, (0, 0))
    c2, t2 = mc.act_root(neg(e2), t1)
    assert t2 == (0, 0) and c1 * c2 == F(1, 2) * (-F(1, 2)) * F(9, 4) * F(5, 4)
    # empty levi: orbit is the single vector
    assert m.levi_orbit((0, 0, 0), levi_simples=[], radius=2).orbit == [(0, 0, 0)]


@pytest.mark.parametrize("build,params,radius", [
    (build_N, ["1/2", "1/3", "0"], 3),
    (build_N, ["-1", "1/2", "1/3", "0"], 2),
    (build_M, ["-1", "1/4"], 3),
    (build_M, ["-1", "1/4", "1/5"], 2),
])
def test_bracket_fidelity_on_window(build, params, radius):
    m = build(params)
    system = m.system
    roots = sorted(system.roots, key=lambda r: (sum(r), r))
    window = m.window(radius)
    for i, mu in enumerate(roots):
        for nu in roots[i + 1:]:
            s = tuple(a + b for a, b in zip(mu, nu))
            for k in window:
                got = {}
                for x, y, sign in ((mu, nu, 1), (nu, mu, -1)):
                    c1, k1 = m.act_root(y, k)
                    if c1:
                        c2, k2 = m.act_root(x, k1)
                        if c1 * c2:
                            got[k2] = got.get(k2, F(0)) + sign * c1 * c2
                got = {kk: v for kk, v in got.items() if v}
                want = {}
                if s in system.roots:
                    n = system.realization.structure_constant(mu, nu)
                    c3, k3 = m.act_root(s, k)
                    if n * c3:
                        want[k3] = n * c3
                elif not any(s):
                    coeffs = system.realization.cartan_coefficients(mu)
                    val = sum((a * b for a, b in zip(coeffs, m.weight_of(k))), F(0))
                    if val:
                        want[k] = val
                assert got == want, (mu, nu, k)
