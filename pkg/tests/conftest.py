import pytest

from otlck import PrecisionContext, new_field

CTX = PrecisionContext(64, 2, 4096)


@pytest.fixture(scope="session")
def sqrt2():
    return new_field("x^2 - 2", CTX)


@pytest.fixture(scope="session")
def sqrt5():
    return new_field("x^2 - 5", CTX)


@pytest.fixture(scope="session")
def plastic():
    return new_field("x^3 - x - 1", CTX)


@pytest.fixture(scope="session")
def quartic():
    return new_field("x^4 - 2x^2 - 1", CTX)


@pytest.fixture(scope="session")
def zeta5():
    return new_field("x^4 + x^3 + x^2 + x + 1", CTX)


@pytest.fixture(scope="session")
def quintic():
    return new_field("x^5 - x - 1", CTX)
