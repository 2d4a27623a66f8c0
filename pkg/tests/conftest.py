import pytest

from diffalg.fields import make_tower


@pytest.fixture(scope="session")
def qx():
    """Q(x) with d/dx."""
    return make_tower("Q", [("rational", "x")], delta={"x": "1"})


@pytest.fixture(scope="session")
def f3x():
    """F_3(x) with d/dx; constants F_3(x^3)."""
    return make_tower(3, [("rational", "x")], delta={"x": "1"})


@pytest.fixture(scope="session")
def f5x():
    return make_tower(5, [("rational", "x")], delta={"x": "1"})
