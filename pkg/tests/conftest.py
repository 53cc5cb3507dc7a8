import numpy as np
import pytest

from crossgrade.coeffs import galois_s3, quaternion_units, roots_of_unity, sign_units
from crossgrade.groups import direct_product, make_cyclic, make_symmetric3


@pytest.fixture(scope="session")
def c2():
    return make_cyclic(2)


@pytest.fixture(scope="session")
def c4c4():
    return direct_product(make_cyclic(4), make_cyclic(4))


@pytest.fixture(scope="session")
def s3():
    return make_symmetric3()


@pytest.fixture(scope="session")
def mu4c():
    return roots_of_unity(4, True)


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20260314)


@pytest.fixture(scope="session")
def systems():
    return {"sign": sign_units(), "mu4": roots_of_unity(4), "mu4c": roots_of_unity(4, True),
            "mu2c": roots_of_unity(2, True), "q8": quaternion_units(), "galois": galois_s3()}
