import pytest

from hyperpi import ctx_new


@pytest.fixture(scope="session")
def ctx30():
    return ctx_new(30)


@pytest.fixture(scope="session")
def ctx50():
    return ctx_new(50)


@pytest.fixture(scope="session")
def ctx60():
    return ctx_new(60)


@pytest.fixture(scope="session")
def ctx100():
    return ctx_new(100)
