import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from signpoly import (
    MN,
    Partition,
    Shape,
    ShapeFirstCol,
    decompose,
    enumerate_family,
    integer_points,
    is_asm,
    membership,
    nonneg_equivalence_check,
    split,
    transportation_spec,
)
from signpoly.checks import (
    SPLIT_EXAMPLE,
    SPLIT_EXAMPLE_MINUS,
    SPLIT_EXAMPLE_PLUS,
    random_combination,
    random_transport_point,
)
from signpoly.membership import family_tag_for
from signpoly.partial_sums import as_matrix, partial_sums

S331 = Shape(Partition((3, 3, 1)), 4)
S22 = Shape(Partition((2, 2)), 3)


def test_membership_examples():
    assert membership(SPLIT_EXAMPLE, S331)
    assert membership([[1, 0, 0, 1], [0, "2/5", "3/5", -1], [0, "3/5", "-3/5", 0]], Shape(Partition((3, 3)), 4))
    v = membership([[0, 2], [0, 0]], MN(2, 2))
    assert not v and v.violation.kind == "column partial sum <= 1"
    assert (v.violation.i, v.violation.j) == (1, 2)
    v = membership([[1, 1, 0], [0, 0, 0]], Shape(Partition((2, 1)), 3))
    assert not v and v.violation.kind == "row total"


def test_membership_of_members_and_nonmembers():
    members = set(M.entries for M in enumerate_family(S22))
    for flat in itertools.product((-1, 0, 1), repeat=6):
        X = (flat[:3], flat[3:])
        assert bool(membership(X, S22)) == (X in members)


def test_split_example():
    r = split(SPLIT_EXAMPLE, S331)
    assert (r.ell_plus, r.ell_minus) == (F(1, 10), F(7, 10))
    assert r.x_plus == as_matrix(SPLIT_EXAMPLE_PLUS)
    assert r.x_minus == as_matrix(SPLIT_EXAMPLE_MINUS)
    assert (r.weight_plus, r.weight_minus) == (F(7, 8), F(1, 8))


def test_split_rejects_integral_and_outside():
    M = enumerate_family(S22)[0]
    with pytest.raises(ValueError):
        split(M.entries, S22)
    with pytest.raises(ValueError):
        split([[2, 0, 0], [0, 0, 0]], S22)


def test_midpoint_children_gain_integral_sums():
    members = enumerate_family(S22)
    pairs = list(itertools.combinations(members, 2))
    assert len(pairs) == 15
    for a, b in pairs:
        X = tuple(tuple(F(x + y, 2) for x, y in zip(ra, rb)) for ra, rb in zip(a.entries, b.entries))
        base = partial_sums(X).integral_count()
        r = split(X, S22)
        assert partial_sums(r.x_plus).integral_count() > base
        assert partial_sums(r.x_minus).integral_count() > base


def test_decompose_member_is_single_term():
    for M in enumerate_family(S22):
        combo = decompose(M.entries, S22)
        assert combo.terms == ((F(1), M),)


def test_decompose_split_example():
    combo = decompose(SPLIT_EXAMPLE, S331)
    assert combo.point() == as_matrix(SPLIT_EXAMPLE)
    assert combo.total_weight() == 1
    assert all(M in enumerate_family(S331) for _, M in combo.terms)


def test_decompose_rejects_outside_point():
    with pytest.raises(ValueError):
        decompose([[F(3, 2), 0, 0], [0, 0, 0]], S22)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([S22, S331, MN(2, 3), MN(3, 2), Shape(Partition((2, 1)), 3)]), st.randoms(use_true_random=False))
def test_decompose_reconstructs(tag, rng):
    X = random_combination(enumerate_family(tag), rng)
    stats = {}
    combo = decompose(X, tag, stats)
    assert combo.point() == X
    assert combo.total_weight() == 1
    assert stats["monotone"]


def test_transportation_spec_examples():
    spec = transportation_spec((1, 2, 3, 6), [6, 3, 3, 1], 7)
    assert spec.y == tuple(map(F, (1, 0, 0, 2, 0, 1)))
    assert spec.z == tuple(map(F, (1, 1, 1, 0, 0, 1, 0)))
    assert transportation_spec((1,), [1], 3).z == (1, 0, 0)
    assert transportation_spec((1, 2, 3), [1, 1, 1], 3).z == (1, 1, 1)


def test_nonneg_equivalence():
    lam = Partition((2, 1))
    for v in [(1, 2), (1, 3), (2, 3)]:
        for M in enumerate_family(ShapeFirstCol(v, lam, 3)):
            if all(x >= 0 for row in M.entries for x in row):
                assert nonneg_equivalence_check(M.entries, v, lam, 3)
        spec = transportation_spec(v, lam, 3)
        rng = random.Random(1)
        for _ in range(20):
            assert nonneg_equivalence_check(random_transport_point(spec.y, spec.z, rng), v, lam, 3)
    assert nonneg_equivalence_check([[1, 1, 0], [0, 0, 0]], (1, 2), lam, 3)
    with pytest.raises(ValueError):
        nonneg_equivalence_check([[1, -1, 1], [0, 0, 0]], (1, 3), lam, 3)


def test_integer_points():
    for tag in (MN(2, 2), S22, Shape(Partition((3, 2, 1)), 3)):
        assert integer_points(tag) == enumerate_family(tag)
    asms = [M for M in integer_points(Shape(Partition((3, 2, 1)), 3)) if is_asm(M)]
    assert len(asms) == 7


def test_family_tag_for():
    assert family_tag_for([2, 1], 3) == Shape(Partition((2, 1)), 3)
    assert isinstance(family_tag_for([2, 1], 3, v=(1, 2)), ShapeFirstCol)
    assert family_tag_for([2, 1], 3, m=4).rows == 4
