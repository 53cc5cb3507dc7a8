"""Brute-force reference computations, independent of the linear algebra.

Everything here enumerates tables directly with the unit multiplication
and automorphism tables; nothing is imported from cohom or decide.
"""

from __future__ import annotations

from itertools import product

import numpy as np


def all_tables(nu: int, m: int) -> np.ndarray:
    """Every length-m word over range(nu), as rows."""
    idx = np.arange(nu ** m)
    return np.stack([(idx // nu ** j) % nu for j in range(m)], axis=1) if m else np.zeros((1, 0), dtype=np.int64)


def normalized_cocycles(G, coeff, eta) -> np.ndarray:
    """All alpha with alpha(e, .) = alpha(., e) = 1 satisfying the twisting condition."""
    n, U = G.order, coeff.units
    mul, act, t = U.table, coeff.act, G.table
    words = all_tables(U.order, (n - 1) ** 2)
    A = np.zeros((len(words), n, n), dtype=np.int64)
    A[:, 1:, 1:] = words.reshape(len(words), n - 1, n - 1)
    ok = np.ones(len(A), dtype=bool)
    for a, b, c in product(range(n), repeat=3):
        lhs = mul[A[:, a, b], A[:, t[a, b], c]]
        rhs = mul[act[eta[a]][A[:, b, c]], A[:, a, t[b, c]]]
        ok &= lhs == rhs
    return A[ok]


def coboundaries(G, coeff, eta, normalized=True) -> np.ndarray:
    n, U = G.order, coeff.units
    mul, act, t, inv = U.table, coeff.act, G.table, U.inv
    out = []
    for lam in product(range(U.order), repeat=n - 1 if normalized else n):
        lam = np.array(((0,) + lam) if normalized else lam)
        d = np.empty((n, n), dtype=np.int64)
        for g, h in product(range(n), repeat=2):
            d[g, h] = mul[mul[lam[g], act[eta[g]][lam[h]]], inv[lam[t[g, h]]]]
        out.append(d)
    return np.array(out)


def brute_h2_order(G, coeff, eta) -> int:
    """Number of classes: orbits of normalized cocycles under normalized coboundaries."""
    Z = normalized_cocycles(G, coeff, eta)
    B = coboundaries(G, coeff, eta)
    nu = coeff.units.order
    weights = nu ** np.arange(G.order ** 2)
    mins = None
    for b in B:
        code = coeff.units.table[Z, b[None]].reshape(len(Z), -1) @ weights
        mins = code if mins is None else np.minimum(mins, code)
    return len(np.unique(mins))


def brute_is_coboundary(G, coeff, eta, alpha) -> bool:
    alpha = np.asarray(alpha)
    return any(np.array_equal(d, alpha) for d in coboundaries(G, coeff, eta, normalized=False))


def gl2_mod(n: int) -> int:
    """|GL_2(Z/n)| by counting matrices with unit determinant."""
    units = {x for x in range(n) if np.gcd(x, n) == 1}
    return sum(1 for a, b, c, d in product(range(n), repeat=4) if (a * d - b * c) % n in units)


def brute_orbit(pair, ks, apply):
    """Orbit of a pair under an explicit finite list of K-elements."""
    return {apply(k, pair).key() for k in ks}


def small_contexts():
    """(name, G, coeff, eta) for |G| <= 4, commutative |U| <= 4, trivial and conjugation-type actions.

    The nontrivial action is inversion on U through a character G -> C2.
    """
    from crossgrade.coeffs import inversion_system
    from crossgrade.groups import direct_product, homomorphisms_to_c2, make_cyclic

    groups = {"C1": make_cyclic(1), "C2": make_cyclic(2), "C3": make_cyclic(3), "C4": make_cyclic(4),
              "C2xC2": direct_product(make_cyclic(2), make_cyclic(2))}
    units = {"U1": make_cyclic(1), "U2": make_cyclic(2), "U3": make_cyclic(3), "U4": make_cyclic(4),
             "U2xU2": direct_product(make_cyclic(2), make_cyclic(2))}
    out = []
    for gname, G in groups.items():
        for uname, U in units.items():
            C = inversion_system(U)
            for chi in homomorphisms_to_c2(G):
                if any(chi) and C.n_autos == 1:
                    continue
                tag = "trivial" if not any(chi) else f"inv{list(chi)}"
                out.append((f"{gname}/{uname}/{tag}", G, C, np.array(chi, dtype=np.int64)))
    return out


def random_pair(rng, G, C, eta, h2=None):
    """A random pair with the given eta: class representative times a random coboundary."""
    from crossgrade.cohom import module_from_coeffs, second_cohomology
    from crossgrade.crossed import make_pair
    from crossgrade.kaction import apply, pure_lambda

    if h2 is None:
        h2 = second_cohomology(G, module_from_coeffs(G, C, eta))
    rep = h2.representatives[rng.integers(h2.order)]
    base = make_pair(G, C, rep, eta)
    lam = rng.integers(0, C.n_units, G.order)
    return apply(pure_lambda(lam), base)


def random_k(rng, G, C, gautos):
    from crossgrade.kaction import KElement
    return KElement(rng.integers(0, C.n_units, G.order), int(rng.integers(C.n_autos)),
                    gautos[rng.integers(len(gautos))])
