from fractions import Fraction

import pytest

from signpoly import Partition, validate

# 3x6 sign matrix whose tableau has shape [3,3,1,1,1].
TABLEAU_EXAMPLE_MATRIX = ((0, 0, 1, 0, 0, 1), (0, 1, 0, 0, 0, -1), (1, 0, -1, 1, 1, 1))
TABLEAU_EXAMPLE_ROWS = ((1, 2, 3), (2, 3, 6), (4,), (5,), (6,))

F = Fraction


@pytest.fixture
def tableau_example():
    return validate(TABLEAU_EXAMPLE_MATRIX)


@pytest.fixture
def shape331():
    return Partition((3, 3, 1))
