import pytest

from hgirr import Partition, build


@pytest.fixture
def two_path():
    """The two-edge 3-uniform instance {1,2,3}, {1,4,5}."""
    return build(3, 5, [[1, 2, 3], [1, 4, 5]])


@pytest.fixture
def two_path_partition():
    """Valid 3-partition {1} | {2,4} | {3,5} of the two-edge instance."""
    return Partition((1, 2, 3, 2, 3), 3)


@pytest.fixture
def star3():
    """3-uniform star: three edges through vertex 1."""
    return build(3, 7, [[1, 2, 3], [1, 4, 5], [1, 6, 7]])
