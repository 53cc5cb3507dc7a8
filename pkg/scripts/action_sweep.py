"""Random sweep of the K group law, the action axiom and Gamma-invariance.

    python3 scripts/action_sweep.py [samples] [seed]
"""

import sys
import time

import numpy as np

from crossgrade.coeffs import roots_of_unity
from crossgrade.cohom import module_from_coeffs, second_cohomology
from crossgrade.crossed import check_pair, make_pair
from crossgrade.groups import automorphism_group, direct_product, homomorphisms_to_c2, make_cyclic
from crossgrade.kaction import KElement, apply, k_compose


def random_k(rng, G, C, auts):
    return KElement(rng.integers(0, C.n_units, G.order), int(rng.integers(C.n_autos)),
                    auts[rng.integers(len(auts))])


def main(samples=10_000, seed=0):
    rng = np.random.default_rng(seed)
    G, C = direct_product(make_cyclic(4), make_cyclic(4)), roots_of_unity(4, True)
    auts = automorphism_group(G)
    pool = []
    for chi in homomorphisms_to_c2(G):
        h = second_cohomology(G, module_from_coeffs(G, C, np.array(chi)))
        pool += [make_pair(G, C, r, chi) for r in h.representatives]
    t = time.perf_counter()
    assoc = axiom = gamma = 0
    for _ in range(samples):
        p = pool[rng.integers(len(pool))]
        k1, k2, k3 = (random_k(rng, G, C, auts) for _ in range(3))
        assoc += k_compose(k_compose(k1, k2, C), k3, C) != k_compose(k1, k_compose(k2, k3, C), C)
        q = apply(k2, p)
        axiom += apply(k1, q) != apply(k_compose(k1, k2, C), p)
        gamma += not check_pair(G, C, q.alpha, q.eta)
    print(f"{samples} samples over C4xC4 / mu4 with conjugation, {len(pool)} base pairs, "
          f"{time.perf_counter() - t:.1f}s")
    print(f"associativity violations {assoc}, action axiom violations {axiom}, outputs outside Gamma {gamma}")
    return assoc + axiom + gamma


if __name__ == "__main__":
    args = [int(x) for x in sys.argv[1:3]]
    sys.exit(1 if main(*args) else 0)
