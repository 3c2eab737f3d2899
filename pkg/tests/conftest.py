import functools

import pytest

from dlcalc.rootsys import RootSystem


@functools.lru_cache(maxsize=None)
def system(cartan_type: str, rank: int) -> RootSystem:
    # shared so memo tables survive across tests
    return RootSystem(cartan_type, rank)


@pytest.fixture
def A1():
    return system("A", 1)


@pytest.fixture
def A2():
    return system("A", 2)


@pytest.fixture
def A3():
    return system("A", 3)


@pytest.fixture
def B2():
    return system("B", 2)


@pytest.fixture
def G2():
    return system("G", 2)
