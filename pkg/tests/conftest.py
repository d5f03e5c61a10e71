import pytest

from orthoquantale import catalog


@pytest.fixture(scope="session")
def mo2():
    return catalog.mo(2)


@pytest.fixture(scope="session")
def g12():
    return catalog.g12()


@pytest.fixture(scope="session")
def b2():
    return catalog.boolean_algebra(2)


@pytest.fixture(scope="session")
def b3():
    return catalog.boolean_algebra(3)


def small_catalog():
    """Catalog lattices small enough for the Moore-family scan."""
    return [catalog.boolean_algebra(k) for k in range(5)] + [
        catalog.mo(n) for n in range(1, 5)
    ] + [catalog.product(catalog.mo(2), catalog.boolean_algebra(1)), catalog.g12()]


def full_catalog():
    return small_catalog() + [catalog.product(catalog.mo(2), catalog.mo(2))]
