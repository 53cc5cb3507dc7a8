import numpy as np
import pytest

from crossgrade.classify import classify_real, classify_strata, strata_counts
from crossgrade.cohom import conjugation_character, divisible_cohomology, merge_conjugate_classes
from crossgrade.coeffs import roots_of_unity
from crossgrade.crossed import make_pair
from crossgrade.decide import decide
from crossgrade.groups import direct_product, index_two_subgroups, make_cyclic, make_symmetric3


@pytest.mark.parametrize("build,expected", [
    (lambda: direct_product(make_cyclic(4), make_cyclic(4)), (8, 8, 3, [4, 4, 4])),
    (make_symmetric3, (2, 2, 1, [2])),
    (lambda: make_cyclic(2), (2, 2, 1, [2])),
])
def test_counts(build, expected):
    assert strata_counts(build()) == expected


def test_entries_shape(s3):
    entries = classify_real(s3)
    assert [e.base for e in entries] == ["R", "R", "H", "H", "C", "C", "C"]
    for e in entries:
        if e.base != "C":
            assert len(e.kernel) == 6
    assert sum(e.class_set_size for e in entries if e.base == "C") == 3


def test_real_and_quaternion_equal_sign_cohomology(c4c4):
    s = classify_strata(c4c4)
    assert s[0].count == s[1].count == 8


def _catalog_pairs(G, kernel):
    """Ladder representatives re-expressed over mu_N' (the witness module) with conjugation."""
    h2 = divisible_cohomology(G, kernel=kernel)
    chi = conjugation_character(G, kernel) if kernel is not None else (0,) * G.order
    N, Nw = h2.module.factors[0], h2.witness_module().factors[0]
    C = roots_of_unity(Nw, True)
    pairs = [make_pair(G, C, h2.module.decode(r)[..., 0] * (Nw // N), np.array(chi)) for r in h2.representatives]
    assert all(p.validated for p in pairs)
    where = {i: k for k, s in enumerate(merge_conjugate_classes(h2)) for i in s}
    return pairs, where


SMALL = {"c2": lambda: make_cyclic(2), "c4": lambda: make_cyclic(4), "c6": lambda: make_cyclic(6),
         "c2xc2": lambda: direct_product(make_cyclic(2), make_cyclic(2)), "s3": make_symmetric3}


@pytest.mark.parametrize("gname", list(SMALL))
def test_cross_validation_with_decide(gname):
    """Within a catalog entry the C-pairs are R-graded isomorphic, across entries they are not."""
    G = SMALL[gname]()
    for kernel in [None] + index_two_subgroups(G):
        pairs, where = _catalog_pairs(G, kernel)
        for i in range(len(pairs)):
            for j in range(len(pairs)):
                same = decide("graded_iso", pairs[i], pairs[j]).equivalent
                assert same == (where[i] == where[j])


def test_cross_validation_c4c4(c4c4, rng):
    for kernel in [None, index_two_subgroups(c4c4)[int(rng.integers(3))]]:
        pairs, where = _catalog_pairs(c4c4, kernel)
        for _ in range(6):
            i, j = (int(x) for x in rng.integers(len(pairs), size=2))
            assert decide("graded_iso", pairs[i], pairs[j]).equivalent == (where[i] == where[j])
