import itertools

import pytest
from hypothesis import given, strategies as st

from signpoly import (
    MN,
    InvalidSignMatrix,
    Padded,
    Partition,
    Shape,
    ShapeFirstCol,
    Tableau,
    enumerate_family,
    enumerate_family_via_tableaux,
    enumerate_ssyt,
    gordon_count,
    in_family,
    is_asm,
    is_sign_matrix,
    phi,
    phi_inv,
    validate,
)
from signpoly.sign_matrices import pad_embed

from conftest import TABLEAU_EXAMPLE_MATRIX, TABLEAU_EXAMPLE_ROWS


def test_validate_examples():
    assert validate([[1]]).entries == ((1,),)
    with pytest.raises(InvalidSignMatrix) as err:
        validate([[-1]])
    assert (err.value.i, err.value.j, err.value.value) == (1, 1, -1)
    assert is_sign_matrix(TABLEAU_EXAMPLE_MATRIX)
    assert not is_sign_matrix([[1], [1]])
    assert not is_sign_matrix([[0, 1, -1, -1]])


def test_validate_matches_brute_definition():
    for m, n in [(2, 2), (2, 3), (3, 2)]:
        brute = []
        for flat in itertools.product((-1, 0, 1), repeat=m * n):
            X = [flat[i * n:(i + 1) * n] for i in range(m)]
            cols_ok = all(0 <= sum(X[r][j] for r in range(i + 1)) <= 1 for i in range(m) for j in range(n))
            rows_ok = all(sum(X[i][: j + 1]) >= 0 for i in range(m) for j in range(n))
            if cols_ok and rows_ok:
                brute.append(tuple(map(tuple, X)))
        assert sorted(brute) == sorted(M.entries for M in enumerate_family(MN(m, n)))


def test_phi_example(tableau_example):
    T = phi(tableau_example)
    assert T.shape.parts == (3, 3, 1, 1, 1)
    assert T.rows == TABLEAU_EXAMPLE_ROWS
    back = phi_inv(Tableau(Partition((3, 3, 1, 1, 1)), TABLEAU_EXAMPLE_ROWS, 6))
    assert back == tableau_example
    assert back.row_totals() == (2, 0, 3)


def test_phi_edge_cases():
    assert phi(validate([[0]])).shape.parts == ()
    assert phi_inv(Tableau(Partition(()), (), 1), 1).entries == ((0,),)
    M = validate([[1, 0], [0, 1]])
    assert phi_inv(phi(M), 2) == M


def test_phi_inv_row_sums_for_square_shape():
    # Row i carries a_{lambda1-i+1}; for [2,2] that is (2, 0).
    for T in enumerate_ssyt([2, 2], 3):
        assert phi_inv(T).row_totals() == (2, 0)


def test_in_family_examples(tableau_example):
    assert in_family(tableau_example, Shape(Partition((3, 3, 1, 1, 1)), 6))
    assert not in_family(tableau_example, Shape(Partition((3, 3)), 6))
    assert in_family(validate([[0, 0, 0], [0, 0, 0]]), MN(2, 3))
    with pytest.raises(ValueError):
        in_family(tableau_example, MN(2, 2))


def test_family_counts():
    assert len(enumerate_family(MN(2, 2))) == 10
    assert len(enumerate_family(Shape(Partition((2, 2)), 3))) == 6
    assert len(enumerate_family(Shape(Partition((3, 2, 1)), 3))) == 8


@pytest.mark.parametrize("tag", [
    MN(2, 2), MN(2, 3), MN(3, 3), Shape(Partition((2, 2)), 3), Shape(Partition((3, 1)), 4),
    ShapeFirstCol((1, 3), Partition((2, 2)), 4), Padded(3, Partition((2, 1)), 3),
])
def test_two_enumerations_agree(tag):
    a = enumerate_family(tag)
    assert a == enumerate_family_via_tableaux(tag)
    assert all(in_family(M, tag) for M in a)


def test_gordon_agrees_with_enumeration():
    for m in range(1, 4):
        for n in range(1, 4):
            assert len(enumerate_family(MN(m, n))) == gordon_count(m, n)


def test_asm_examples():
    assert is_asm(validate([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert is_asm(validate([[0, 1, 0], [1, -1, 1], [0, 1, 0]]))
    members = enumerate_family(Shape(Partition((3, 2, 1)), 3))
    assert sum(map(is_asm, members)) == 7


def test_pad_embed(tableau_example):
    assert pad_embed(tableau_example, 3) == tableau_example
    padded = pad_embed(tableau_example, 5)
    assert padded.row_totals() == (0, 0, 2, 0, 3)
    assert pad_embed(validate([[1]]), 2).entries == ((0,), (1,))


def test_family_tag_validation():
    with pytest.raises(ValueError):
        ShapeFirstCol((1, 4), Partition((2, 2)), 3)
    with pytest.raises(ValueError):
        Padded(1, Partition((2,)), 3)
    with pytest.raises(ValueError):
        MN(0, 2)


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_round_trip_property(m, n, data):
    M = data.draw(st.sampled_from(enumerate_family(MN(m, n))))
    T = phi(M)
    assert phi_inv(T, m) == M
    assert T.n == n
