import pytest

from chorn import build_graph, family_graph


@pytest.fixture
def c4():
    return family_graph("C", 4)


@pytest.fixture
def c4_chord():
    return build_graph(4, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)])
