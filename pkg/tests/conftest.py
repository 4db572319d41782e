import pytest

from pointideal import PointSet, QQ


@pytest.fixture
def example_a() -> PointSet:
    """Four points whose ideal has the 2x2 block staircase."""
    return PointSet(QQ, 2, [(1, 0), (1, 2), (3, 1), (3, 4)])


@pytest.fixture
def example_a_prime() -> PointSet:
    """The same four points plus (2, 3)."""
    return PointSet(QQ, 2, [(1, 0), (1, 2), (2, 3), (3, 1), (3, 4)])
