from fractions import Fraction as F

from hypothesis import given, strategies as st

from signpoly.linalg import affine_dimension, rational_rank


def oracle_rank(rows):
    """Plain Gaussian elimination over Fraction."""
    A = [[F(x) for x in r] for r in rows]
    rank, col = 0, 0
    width = len(A[0]) if A else 0
    while rank < len(A) and col < width:
        piv = next((i for i in range(rank, len(A)) if A[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for i in range(len(A)):
            if i != rank and A[i][col] != 0:
                f = A[i][col] / A[rank][col]
                A[i] = [a - f * b for a, b in zip(A[i], A[rank])]
        rank += 1
        col += 1
    return rank


entries = st.fractions(min_value=-3, max_value=3, max_denominator=5)


@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_rank_matches_oracle(rows, cols, data):
    A = [[data.draw(entries) for _ in range(cols)] for _ in range(rows)]
    assert rational_rank(A) == oracle_rank(A)


@given(st.integers(1, 4), st.integers(1, 5), st.data())
def test_rank_of_dependent_rows(rows, cols, data):
    A = [[data.draw(st.integers(-3, 3)) for _ in range(cols)] for _ in range(rows)]
    k = data.draw(st.integers(-2, 2))
    B = A + [[k * x + y for x, y in zip(A[0], A[-1])]]
    assert rational_rank(B) == rational_rank(A)


def test_affine_dimension_small_cases():
    assert affine_dimension([]) == -1
    assert affine_dimension([[[1, 0]]]) == 0
    assert affine_dimension([[[0, 0]], [[1, 0]], [[0, 1]], [[1, 1]]]) == 2
    assert affine_dimension([[[0, 0]], [[1, 1]], [[2, 2]]]) == 1
