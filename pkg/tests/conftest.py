import pytest

from zfhp import build_mobius


@pytest.fixture(scope="session")
def mobius_1k():
    return build_mobius(1000)


@pytest.fixture(scope="session")
def mobius_100k():
    return build_mobius(10**5)


@pytest.fixture(scope="session")
def mobius_1m():
    return build_mobius(10**6)
