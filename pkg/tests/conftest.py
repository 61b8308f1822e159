import pytest

from chorded import corpus


@pytest.fixture(scope="session")
def tetra():
    return corpus.hollow_tetrahedron()


@pytest.fixture(scope="session")
def rp2():
    return corpus.projective_plane()


@pytest.fixture(scope="session")
def double_tetra():
    return corpus.glued_tetrahedra()


@pytest.fixture(scope="session")
def counterexample7():
    return corpus.seven_vertex_counterexample()


RP2_FACETS = [
    ("1", "2", "3"), ("1", "3", "4"), ("1", "4", "5"), ("1", "5", "6"),
    ("1", "2", "6"), ("2", "3", "5"), ("2", "4", "5"), ("2", "4", "6"),
    ("3", "4", "6"), ("3", "5", "6"),
]
