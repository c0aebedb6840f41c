import pytest

from polyface import lop_vertices


@pytest.fixture(scope="session")
def lop6():
    return lop_vertices(6)


@pytest.fixture(scope="session")
def lop8():
    return lop_vertices(8)
