import pytest

from gkcodes import build_table, new_curve
from gkcodes import oracle


@pytest.fixture(scope="session")
def p21():
    return new_curve(2, 1)


@pytest.fixture(scope="session")
def p23():
    return new_curve(2, 3)


@pytest.fixture(scope="session")
def p31():
    return new_curve(3, 1)


@pytest.fixture(scope="session")
def table21(p21):
    return build_table(p21)


@pytest.fixture(scope="session")
def table23(p23):
    return build_table(p23)


@pytest.fixture(scope="session")
def f21():
    return oracle.make_field(2, 1)


@pytest.fixture(scope="session")
def f23():
    return oracle.make_field(2, 3)
