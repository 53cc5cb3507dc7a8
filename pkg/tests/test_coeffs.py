import numpy as np
import pytest

from crossgrade.coeffs import (S3_GALOIS_LABELS, custom_system, galois_s3, galois_system, inversion_system,
                               quaternion_units, roots_of_unity, sign_units)
from crossgrade.groups import make_cyclic


def test_sign():
    s = sign_units()
    assert s.units.mul(1, 1) == 0
    assert s.n_autos == 1 and s.inner_subgroup == {0} and s.commutative


def test_roots_conj():
    m = roots_of_unity(4, True)
    assert m.act[1, 1] == 3            # conj(i) = -i
    assert m.compose(1, 1) == 0
    m2 = roots_of_unity(2, True)
    assert np.array_equal(m2.act[1], [0, 1])
    assert m2.n_autos == 2


def test_quaternion_relations():
    q = quaternion_units()
    lab = {l: i for i, l in enumerate(q.units.labels)}
    assert q.units.mul(lab["i"], lab["j"]) == lab["k"]
    assert q.units.mul(lab["j"], lab["i"]) == lab["-k"]
    assert q.inner[lab["-1"]] == 0
    assert len(q.inner_subgroup) == 4 and not q.commutative


def test_galois_s3():
    g = galois_s3()
    assert g.n_units == 1 and g.n_autos == 6
    idx = {l: i for i, l in enumerate(g.auto_labels)}
    e1, e2, e3 = idx["eta1"], idx["eta2"], idx["eta3"]
    assert g.compose(e3, g.compose(e1, e3)) == e2
    assert all(g.compose(e, e) == 0 for e in (e1, e2, e3))


def test_galois_rejects_non_group():
    with pytest.raises(ValueError):
        galois_system([(0, 1, 2), (1, 2, 0)])
    with pytest.raises(ValueError):
        galois_system([(0, 1, 2), (1, 0, 2)], ["id"])
    assert S3_GALOIS_LABELS[0] == "id"


def test_custom_inner_checks():
    u = make_cyclic(4)
    c = custom_system(u.table, [(0, 1, 2, 3), (0, 3, 2, 1)])
    assert c.commutative and c.n_autos == 2
    with pytest.raises(ValueError):
        custom_system(u.table, [(0, 1, 2, 3), (0, 2, 1, 3)])      # not multiplicative


def test_inversion_system():
    assert inversion_system(make_cyclic(2)).n_autos == 1
    assert inversion_system(make_cyclic(3)).n_autos == 2


@pytest.mark.parametrize("name", ["sign", "mu4", "mu4c", "mu2c", "q8", "galois"])
def test_inner_subgroup_normal(systems, name):
    C = systems[name]
    inner = C.inner_subgroup
    A = C.autos
    for a in range(A.order):
        for x in inner:
            assert A.table[A.table[a, x], A.inv[a]] in inner
