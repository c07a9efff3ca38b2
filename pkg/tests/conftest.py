import pytest

from hopftwist import catalog


@pytest.fixture(scope="session")
def h8():
    return catalog.builtin("h8")


@pytest.fixture(scope="session")
def H8(h8):
    return h8.algebra


@pytest.fixture(scope="session")
def group_pkgs():
    return {name: catalog.builtin(name) for name in ("c2", "c3", "c4", "c6", "s3")}
