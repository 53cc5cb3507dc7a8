from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from crossgrade.crossed import from_structure_constants_bicyclic, make_pair
from crossgrade.groups import automorphism_group
from crossgrade.kaction import (KElement, action_axiom_check, apply, k_compose, k_identity, k_inverse,
                                normalizing_element, pure_lambda, pure_phi, pure_phi_g)


def test_identity(c2, mu4c):
    h = make_pair(c2, mu4c, [[0, 0], [0, 2]], [0, 1])
    e = k_identity(c2)
    assert apply(e, h) == h
    assert k_inverse(e, mu4c) == e
    k = KElement([1, 2], 1, (0, 1))
    assert k_compose(e, k, mu4c) == k == k_compose(k, e, mu4c)


def test_pure_lambda_product(c2, mu4c):
    a, b = pure_lambda([1, 2]), pure_lambda([3, 3])
    assert np.array_equal(k_compose(a, b, mu4c).lam, [0, 1])


def test_conj_moves_lambda(c2, mu4c):
    # conj . lambda = conj(lambda) . conj
    k = k_compose(pure_phi(c2, 1), pure_lambda([0, 1]), mu4c)
    assert k == KElement([0, 3], 1, (0, 1))


def test_hand_evaluation(c2, mu4c):
    h = make_pair(c2, mu4c, [[0, 0], [0, 2]], [0, 1])
    out = apply(pure_lambda([0, 2]), h)
    assert out == h


def test_conj_sends_alpha_to_alpha_bar(mu4c):
    a = from_structure_constants_bicyclic(4, 4, 1, mu4c)
    b = from_structure_constants_bicyclic(4, 4, 3, mu4c)
    assert apply(pure_phi(a.group, 1), a) == b


def test_normalizing(c2, mu4c):
    h = make_pair(c2, mu4c, [[0, 0], [0, 2]], [0, 1])
    un = apply(pure_lambda([1, 0]), h)
    assert un.alpha[0, 0] != 0
    n = apply(normalizing_element(un), un)
    assert not n.alpha[0].any() and not n.alpha[:, 0].any()


def test_exhaustive_mu2(c2, systems):
    C = systems["mu2c"]
    ks = [KElement(lam, phi, (0, 1)) for lam in product(range(2), repeat=2) for phi in range(2)]
    pairs = [make_pair(c2, C, np.array(a).reshape(2, 2), [0, e]) for a in product(range(2), repeat=4)
             for e in range(2)]
    pairs = [p for p in pairs if p.validated]
    assert pairs
    for k1, k2, k3 in product(ks, repeat=3):
        assert k_compose(k_compose(k1, k2, C), k3, C) == k_compose(k1, k_compose(k2, k3, C), C)
    assert action_axiom_check(pairs, ks).ok


def _random_k(rng, G, C, auts):
    return KElement(rng.integers(0, C.n_units, G.order), int(rng.integers(C.n_autos)), auts[rng.integers(len(auts))])


def test_random_group_law(c4c4, mu4c, rng):
    auts = automorphism_group(c4c4)
    for _ in range(300):
        k1, k2, k3 = (_random_k(rng, c4c4, mu4c, auts) for _ in range(3))
        assert k_compose(k_compose(k1, k2, mu4c), k3, mu4c) == k_compose(k1, k_compose(k2, k3, mu4c), mu4c)
        assert k_compose(k1, k_inverse(k1, mu4c), mu4c).is_identity()
        assert k_compose(k_inverse(k1, mu4c), k1, mu4c).is_identity()


def test_clause_consistency(c4c4, mu4c, rng):
    """lambda, then phi, then phi_G applied one at a time equals the composed element."""
    auts = automorphism_group(c4c4)
    p = from_structure_constants_bicyclic(4, 4, 1, mu4c)
    for _ in range(50):
        lam = pure_lambda(rng.integers(0, 4, 16))
        phi = pure_phi(c4c4, int(rng.integers(2)))
        f = pure_phi_g(auts[rng.integers(96)])
        step = apply(lam, apply(phi, apply(f, p)))
        k = k_compose(lam, k_compose(phi, f, mu4c), mu4c)
        assert apply(k, p) == step


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=16, max_size=16), st.integers(0, 1), st.integers(0, 95))
def test_gamma_invariance(lam, phi, fi):
    from crossgrade.coeffs import roots_of_unity
    from crossgrade.groups import direct_product, make_cyclic
    G = direct_product(make_cyclic(4), make_cyclic(4))
    C = roots_of_unity(4, True)
    p = from_structure_constants_bicyclic(4, 4, 1, C)
    k = KElement(lam, phi, automorphism_group(G)[fi])
    apply(k, p, verify=True)


def test_mismatched_k(c2, mu4c):
    h = make_pair(c2, mu4c, [[0, 0], [0, 2]], [0, 1])
    with pytest.raises(ValueError):
        apply(KElement([0, 0, 0], 0, (0, 1, 2)), h)
