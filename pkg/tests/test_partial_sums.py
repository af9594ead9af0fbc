from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from signpoly import MN, Partition, Shape, enumerate_family, find_fractional_circuit, partial_sums
from signpoly.partial_sums import (
    GridSpec,
    NoFractionalColumnSum,
    as_matrix,
    circuit_direction_matrix,
    labeling_to_dot,
    matrix_from_column_sums,
)
from signpoly.checks import SPLIT_EXAMPLE

from conftest import TABLEAU_EXAMPLE_MATRIX

CLOSED_EXAMPLE = ((1, 0, 0, 1), (0, "2/5", "3/5", -1), (0, "3/5", "-3/5", 0))


def test_labels_of_split_example():
    lab = partial_sums(SPLIT_EXAMPLE)
    assert lab.col_sum(1, 1) == lab.col_sum(2, 1) == lab.col_sum(3, 1) == F(9, 10)
    assert lab.row_sum(3, 4) == 1


def test_zero_and_integer_labels():
    lab = partial_sums([[0, 0], [0, 0]])
    assert all(lab.label(e) == 0 for e in GridSpec(2, 2).edges())
    for M in enumerate_family(MN(2, 3)):
        lab = partial_sums(M.entries)
        assert all(c in (0, 1) for row in lab.c for c in row)
        assert all(r >= 0 and r.denominator == 1 for row in lab.r for r in row)


def test_matrix_from_column_sums():
    assert matrix_from_column_sums([[0, 0], [0, 0]]) == as_matrix([[0, 0], [0, 0]])
    c = partial_sums(TABLEAU_EXAMPLE_MATRIX).c
    assert matrix_from_column_sums(c) == as_matrix(TABLEAU_EXAMPLE_MATRIX)


fractions = st.fractions(min_value=-2, max_value=2, max_denominator=12)


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_column_sum_round_trip(m, n, data):
    c = [[data.draw(fractions) for _ in range(n)] for _ in range(m)]
    X = matrix_from_column_sums(c)
    assert partial_sums(X).c == tuple(tuple(row) for row in c)


def test_open_circuit_on_split_example():
    C = find_fractional_circuit(SPLIT_EXAMPLE)
    assert C.kind == "open"
    assert C.corners == ((1, 1), (1, 3), (2, 3), (2, 4))
    X = as_matrix(SPLIT_EXAMPLE)
    assert [X[i - 1][j - 1] for i, j in C.corners] == [F(9, 10), F(3, 10), F(3, 5), F(-7, 10)]
    assert C.vertices[0][0] == C.vertices[-1][0] == 4


def test_closed_circuit_example():
    C = find_fractional_circuit(CLOSED_EXAMPLE)
    assert C.kind == "closed"
    assert len(C.corners) == 4
    assert set(C.corners) == {(2, 2), (2, 3), (3, 2), (3, 3)}


def test_integer_matrix_has_no_circuit():
    with pytest.raises(NoFractionalColumnSum):
        find_fractional_circuit(TABLEAU_EXAMPLE_MATRIX)


def _check_circuit(X, C, m, n):
    lab = partial_sums(X)
    assert all(lab.label(e).denominator != 1 for e in C.edges)
    if C.kind == "closed":
        assert len(set(C.vertices)) == len(C.vertices)
        assert len(C.corners) % 2 == 0
    else:
        assert len(set(C.vertices)) == len(C.vertices)
    D = circuit_direction_matrix(C, m, n)
    # row sums of the direction vanish except where an open end leaves on the right
    for i, row in enumerate(D, start=1):
        if not any(v == (i, n + 1) for v in (C.vertices[0], C.vertices[-1])):
            assert sum(row) == 0


@given(st.data())
def test_circuits_on_random_midpoints(data):
    tag = data.draw(st.sampled_from([Shape(Partition((2, 2)), 3), Shape(Partition((3, 3, 1)), 4), MN(2, 3)]))
    members = enumerate_family(tag)
    a, b = data.draw(st.lists(st.sampled_from(members), min_size=2, max_size=2, unique=True))
    X = tuple(tuple(F(x + y, 2) for x, y in zip(ra, rb)) for ra, rb in zip(a.entries, b.entries))
    C = find_fractional_circuit(X, row_sums_fixed=not isinstance(tag, MN))
    _check_circuit(X, C, tag.rows, tag.cols)


def test_dot_output():
    text = labeling_to_dot([[F(1, 2), 0], [0, 1]])
    assert text.startswith("graph") or text.startswith("digraph")
    assert "1/2" in text
