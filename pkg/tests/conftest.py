import pytest
from hypothesis import HealthCheck, settings

from implodekit.rootdata import build_root_datum, unitary_group

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def a1():
    return build_root_datum("A", 1)


@pytest.fixture(scope="session")
def a2():
    return build_root_datum("A", 2)


@pytest.fixture(scope="session")
def a3():
    return build_root_datum("A", 3)


@pytest.fixture(scope="session")
def b2():
    return build_root_datum("B", 2)


@pytest.fixture(scope="session")
def g2():
    return build_root_datum("G2")


@pytest.fixture(scope="session")
def so3():
    return build_root_datum("A", 1, "adjoint")


@pytest.fixture(scope="session")
def u2():
    return unitary_group(2)
