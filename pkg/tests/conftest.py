"""Shared quivers and AR-quivers."""

import pytest

from quiver_grassmannian.ar_quiver import knit
from quiver_grassmannian.quiver_core import build_quiver


# (type, arrows) pairs used across the suite
A1 = ("A1", [])
A2 = ("A2", [(1, 2)])
A3_LINEAR = ("A3", [(1, 2), (2, 3)])
A4_ALTERNATING = ("A4", [(1, 2), (3, 2), (3, 4)])
D4_SUBSPACE = ("D4", [(1, 4), (2, 4), (3, 4)])
D5 = ("D5", [(1, 2), (2, 3), (4, 3), (3, 5)])
E6 = ("E6", [(1, 2), (2, 4), (3, 4), (4, 5), (5, 6)])

# The (2,2,2,3) example on the subspace-oriented D4
D4_E_SUMMANDS = [(1, 1, 0, 1), (1, 0, 1, 1), (0, 1, 1, 1)]
D4_MESH_HEAD = (1, 1, 1, 1)
D4_MESH_TAIL = (1, 1, 1, 2)
D4_E = (1, 1, 1, 2)


@pytest.fixture(scope="session")
def a1():
    return build_quiver(*A1)


@pytest.fixture(scope="session")
def a2():
    return build_quiver(*A2)


@pytest.fixture(scope="session")
def a3():
    return build_quiver(*A3_LINEAR)


@pytest.fixture(scope="session")
def a4():
    return build_quiver(*A4_ALTERNATING)


@pytest.fixture(scope="session")
def d4():
    return build_quiver(*D4_SUBSPACE)


@pytest.fixture(scope="session")
def e6():
    return build_quiver(*E6)


@pytest.fixture(scope="session")
def ar_a1(a1):
    return knit(a1)


@pytest.fixture(scope="session")
def ar_a2(a2):
    return knit(a2)


@pytest.fixture(scope="session")
def ar_a3(a3):
    return knit(a3)


@pytest.fixture(scope="session")
def ar_a4(a4):
    return knit(a4)


@pytest.fixture(scope="session")
def ar_d4(d4):
    return knit(d4)


@pytest.fixture(scope="session")
def ar_e6(e6):
    return knit(e6)
