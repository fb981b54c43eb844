import pytest

from lmconvex import Carrier, chain, diamond, pentagon


@pytest.fixture(scope="session")
def chain2():
    return chain(2)


@pytest.fixture(scope="session")
def chain3():
    return chain(3)


@pytest.fixture(scope="session")
def boolean_square():
    return diamond()


@pytest.fixture(scope="session")
def n5():
    return pentagon()


@pytest.fixture(scope="session")
def two_points():
    return Carrier(("x", "y"))


@pytest.fixture(scope="session")
def three_points():
    return Carrier(("x", "y", "z"))
