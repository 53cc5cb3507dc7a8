import numpy as np
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from crossgrade.zmod import Solver, echelon, kernel, local_smith, valuation


def span(gens, q):
    """All Z/q combinations of gens, by closure."""
    n = gens.shape[1]
    seen = {tuple([0] * n)}
    todo = [np.zeros(n, dtype=np.int64)]
    while todo:
        x = todo.pop()
        for g in gens:
            y = tuple((x + g) % q)
            if y not in seen:
                seen.add(y)
                todo.append(np.array(y))
    return seen


def test_valuation():
    assert valuation(np.array([0, 1, 2, 4, 6, 8]), 2, 3).tolist() == [3, 0, 1, 2, 1, 3]


mats = arrays(np.int64, st.tuples(st.integers(1, 4), st.integers(1, 3)), elements=st.integers(0, 7))


@settings(max_examples=80, deadline=None)
@given(mats, arrays(np.int64, 3, elements=st.integers(0, 7)))
def test_solver_membership(M, x):
    q = 8
    x = x[: M.shape[1]]
    S = Solver(M, 2, 3)
    inside = tuple(x % q) in span(M % q, q)
    c = S.solve(x)
    assert (c is not None) == inside
    if c is not None:
        assert np.array_equal(c @ M % q, x % q)


@settings(max_examples=60, deadline=None)
@given(mats)
def test_kernel_complete(M):
    q = 8
    K = kernel(M, 2, 3)
    assert not (K @ M % q).any()
    m = M.shape[0]
    # every kernel vector lies in the span of K
    ks = span(K % q, q) if len(K) else {tuple([0] * m)}
    for c in np.ndindex(*([q] * m)):
        if not (np.array(c) @ M % q).any():
            assert tuple(c) in ks


@settings(max_examples=60, deadline=None)
@given(mats)
def test_smith_quotient_order(M):
    q, s = 8, M.shape[1]
    sm = local_smith(M, s, 2, 3)
    order = int(np.prod([2 ** e for e in sm.exponents]))
    assert order == q ** s // len(span(M % q, q))
    assert np.array_equal(sm.V @ sm.Vinv % q, np.eye(s, dtype=np.int64))


def test_echelon_rest_block():
    M = np.array([[2, 1], [0, 2]])
    e = echelon(M, 2, 2, stop=1)
    assert all(not r[0] for r in e.rest)
