"""
Shared graph and group factories for the test suite
"""

import pytest

from nzflow.families import complete, complete_bipartite, cycle, octahedron, petersen
from nzflow.graphcore import Graph
from nzflow.permgrp import PermGroup, Permutation


def perm(degree, *cycles):
    return Permutation.from_cycles(degree, *cycles)


@pytest.fixture
def s4():
    return PermGroup(4, [perm(4, (0, 1, 2, 3)), perm(4, (0, 1))])


@pytest.fixture
def a5():
    return PermGroup(5, [perm(5, (0, 1, 2, 3, 4)), perm(5, (0, 1, 2))])


@pytest.fixture
def d4():
    return PermGroup(4, [perm(4, (0, 1, 2, 3)), perm(4, (1, 3))])


@pytest.fixture
def z5():
    return PermGroup(5, [perm(5, (0, 1, 2, 3, 4))])


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def c6_graph():
    return cycle(6).graph


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def k5():
    return complete(5)


@pytest.fixture
def k33():
    return complete_bipartite(3, 3)


@pytest.fixture
def k55():
    return complete_bipartite(5, 5)


@pytest.fixture
def octa():
    return octahedron()


@pytest.fixture
def petersen_instance():
    return petersen()


@pytest.fixture
def two_triangles_bridged():
    """Two triangles joined by the bridge {2, 3}"""
    return Graph(6, ((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)))


@pytest.fixture
def digon():
    return Graph(2, ((0, 1), (1, 0)))
