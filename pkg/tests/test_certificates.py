from fractions import Fraction as F

import pytest

from signpoly import MN, Partition, Shape, ShapeFirstCol, enumerate_family, validate
from signpoly.certificates import certificate, hyperplane_mn, hyperplane_shape, support, verify_vertex
from signpoly.checks import (
    MN23_K_H_THRESHOLD,
    MN23_K_H_VALUES,
    MN23_NAMED,
    SHAPE22_H_E_THRESHOLD,
    SHAPE22_H_E_VALUES,
    SHAPE22_NAMED,
)


def test_unsigned_table():
    e = validate(SHAPE22_NAMED[4])
    H = hyperplane_shape(e, Shape(Partition((2, 2)), 3))
    assert H.threshold == SHAPE22_H_E_THRESHOLD
    assert tuple(H.evaluate(X) for X in SHAPE22_NAMED) == SHAPE22_H_E_VALUES


def test_signed_table():
    h = validate(MN23_NAMED[3])
    K = hyperplane_mn(h)
    assert K.threshold == MN23_K_H_THRESHOLD
    assert tuple(K.evaluate(X) for X in MN23_NAMED) == MN23_K_H_VALUES


def test_value_at_own_matrix_is_support_size():
    tag = Shape(Partition((3, 2, 1)), 3)
    for M in enumerate_family(tag):
        H = hyperplane_shape(M, tag)
        assert H.evaluate(M) == len(support(M)) == 6


def test_zero_matrix_threshold():
    Z = validate([[0, 0, 0], [0, 0, 0]])
    K = hyperplane_mn(Z)
    assert K.threshold == F(-1, 2)
    assert K.separates(Z, enumerate_family(MN(2, 3)))


def test_unsigned_hyperplane_ties_without_row_totals():
    # with free row totals the unsigned functional does not separate h
    h = validate(MN23_NAMED[3])
    H = hyperplane_shape(h)
    assert [H.evaluate(X) for X in MN23_NAMED] == [2] * 6


@pytest.mark.parametrize(
    "tag",
    [MN(2, 2), MN(2, 3), MN(3, 3), Shape(Partition((2, 2)), 3), Shape(Partition((3, 1)), 4),
     ShapeFirstCol((1, 3), Partition((2, 1)), 3)],
    ids=str,
)
def test_every_member_is_separated(tag):
    members = enumerate_family(tag)
    assert all(verify_vertex(M, tag, members) for M in members)


def test_certificate_rejects_nonmember():
    with pytest.raises(ValueError):
        certificate(validate([[1, 0, 0], [0, 0, 0]]), Shape(Partition((2, 2)), 3))
