from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from crossgrade.coeffs import galois_s3, quaternion_units, roots_of_unity
from crossgrade.crossed import (check_pair, from_structure_constants_bicyclic, make_pair, skew_pair, trivial_pair,
                                twisting_violations, verify_alpha_outer, verify_outer_action, verify_twisting)
from crossgrade.groups import direct_product, make_cyclic


def slow_twisting_ok(G, C, alpha, eta):
    """Triple loop, written out independently of the vectorized check."""
    m = C.units.table
    for a, b, c in product(range(G.order), repeat=3):
        lhs = m[alpha[a, b], alpha[G.mul(a, b), c]]
        rhs = m[C.act[eta[a], alpha[b, c]], alpha[a, G.mul(b, c)]]
        if lhs != rhs:
            return False
    return True


def test_group_algebra(c2, mu4c):
    p = trivial_pair(c2, mu4c)
    assert p.validated and verify_twisting(p) and verify_alpha_outer(p)


def test_quaternion_pair(c2, mu4c):
    h = make_pair(c2, mu4c, [[0, 0], [0, 2]], [0, 1])
    assert h.validated
    bad = make_pair(c2, mu4c, [[0, 0], [0, 1]], [0, 1])
    assert not bad.validated
    assert (1, 1, 1) in twisting_violations(c2, mu4c, bad.alpha, bad.eta)


def test_outer_action_galois():
    g = galois_s3()
    G = make_cyclic(2)
    for e in range(1, 4):
        assert verify_outer_action(G, g, [0, e])
        assert skew_pair(G, g, [0, e]).validated
    assert not verify_outer_action(G, g, [0, 4])       # rho has order 3


def test_noncentral_quaternion_alpha_fails():
    q = quaternion_units()
    G = direct_product(make_cyclic(2), make_cyclic(2))
    alpha = np.zeros((4, 4), dtype=int)
    alpha[1, 2] = 2                                  # alpha(a, b) = i, not central
    p = make_pair(G, q, alpha, np.zeros(4, dtype=int))
    assert not verify_alpha_outer(p) and not p.validated


def test_shape_errors(c2, mu4c):
    with pytest.raises(ValueError):
        make_pair(c2, mu4c, np.zeros((3, 3), dtype=int), [0, 0])
    with pytest.raises(ValueError):
        make_pair(c2, mu4c, np.zeros((2, 2), dtype=int), [0, 5])
    with pytest.raises(ValueError):
        skew_pair(make_cyclic(3), roots_of_unity(4, True), [0, 1, 1])


@pytest.mark.parametrize("q", [0, 1, 2, 3])
def test_bicyclic(mu4c, q):
    p = from_structure_constants_bicyclic(4, 4, q, mu4c)
    assert p.validated and slow_twisting_ok(p.group, mu4c, p.alpha, p.eta)
    # u_g u_h = q u_h u_g with g = (1,0) -> index 4, h = (0,1) -> index 1
    m, inv = mu4c.units.table, mu4c.units.inv
    assert m[p.alpha[4, 1], inv[p.alpha[1, 4]]] == q
    if q == 0:
        assert not p.alpha.any()


def test_bicyclic_inconsistent():
    mu8 = roots_of_unity(8)
    with pytest.raises(ValueError, match="twisting fails"):
        from_structure_constants_bicyclic(2, 2, 1, mu8)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=16, max_size=16), st.sampled_from([(0, 0, 0, 0), (0, 1, 0, 1)]))
def test_vectorized_matches_triple_loop(vals, eta):
    G, C = direct_product(make_cyclic(2), make_cyclic(2)), roots_of_unity(4, True)
    alpha = np.array(vals).reshape(4, 4)
    eta = np.array(eta)
    assert (not twisting_violations(G, C, alpha, eta, limit=1)) == slow_twisting_ok(G, C, alpha, eta)
    assert check_pair(G, C, alpha, eta) == slow_twisting_ok(G, C, alpha, eta)
