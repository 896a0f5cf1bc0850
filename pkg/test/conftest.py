import argparse
import pytest
from kiselman.semigroup import get_semigroup


@pytest.fixture(scope="session")
def k1():
    return get_semigroup(1)


@pytest.fixture(scope="session")
def k2():
    return get_semigroup(2)


@pytest.fixture(scope="session")
def k3():
    return get_semigroup(3)


@pytest.fixture(scope="session")
def k4():
    return get_semigroup(4)


@pytest.fixture
def make_opt():
    """ A verification config with small guards, overridable per test

    """
    def make(**kw):
        values = dict(
            n=2, max_rules=10000, max_elements=100000, samples=200, seed=0, max_n=4, guard_bits=12,
            n_workers=1, progress=False,
        )
        values.update(kw)
        return argparse.Namespace(**values)
    return make
