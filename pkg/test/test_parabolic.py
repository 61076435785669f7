"""Block vectors, membership in p / n_p / Levi, transposition and <=_c."""

import pytest

from src.algebra.field import QQ_FIELD
from src.algebra.jordan import jordan_matrix
from src.algebra.matrix import ExactMatrix
from src.parabolic.shape import (
    BlockVector,
    coarsenings,
    compositions,
    contains,
    dim_nilradical,
    dim_parabolic,
    dims_of,
    in_nilpotent_cone,
    leq_c,
    merge_cuts,
    transpose_element,
)
from src.validation.errors import SizeMismatch


def bv(*blocks):
    return BlockVector(tuple(blocks))


def test_parse_and_str():
    parsed = BlockVector.parse("1,2,1,4")
    assert parsed == bv(1, 2, 1, 4)
    assert str(parsed) == "(1,2,1,4)"
    assert parsed.n == 8 and parsed.p == 4


@pytest.mark.parametrize("text", ["", "1,0,2", "1,-2", "a,b"])
def test_parse_rejects_bad_input(text):
    with pytest.raises(ValueError):
        BlockVector.parse(text)


def test_dims_are_partial_sums():
    shape = dims_of(bv(1, 2, 1, 2, 1))
    assert shape.dims == (1, 3, 4, 6, 7)
    assert shape.n == 7
    assert shape.validate() == []
    assert list(shape.block_range(1)) == [1, 2]


def test_membership_modes():
    shape = dims_of(bv(1, 2))
    upper = ExactMatrix.unit(QQ_FIELD, 3, 3, 0, 2)
    levi = ExactMatrix.unit(QQ_FIELD, 3, 3, 1, 2)
    lower = ExactMatrix.unit(QQ_FIELD, 3, 3, 2, 0)
    assert contains(shape, upper, "nilradical")
    assert contains(shape, upper, "parabolic")
    assert not contains(shape, upper, "levi")
    assert contains(shape, levi, "levi")
    assert not contains(shape, levi, "nilradical")
    assert not contains(shape, lower, "parabolic")
    with pytest.raises(ValueError):
        contains(shape, upper, "borel")


def test_membership_checks_size():
    with pytest.raises(SizeMismatch):
        contains(dims_of(bv(1, 1)), ExactMatrix.zeros(QQ_FIELD, 3, 3))


def test_nilpotent_cone_respects_bound():
    shape = dims_of(bv(1, 1, 1))
    regular = jordan_matrix(QQ_FIELD, (3,))
    assert in_nilpotent_cone(shape, regular)
    assert not in_nilpotent_cone(shape, regular, x=2)
    assert in_nilpotent_cone(shape, regular, x=3)


def test_transpose_maps_p_to_reversed_p():
    shape = dims_of(bv(1, 2))
    reversed_shape = dims_of(bv(2, 1))
    for i, j in [(0, 1), (0, 2), (1, 2), (2, 1), (0, 0)]:
        m = ExactMatrix.unit(QQ_FIELD, 3, 3, i, j)
        assert contains(reversed_shape, transpose_element(shape, m))


def test_transpose_reverses_products():
    shape = dims_of(bv(1, 1, 1))
    a = ExactMatrix.from_rows(QQ_FIELD, [[1, 2, 3], [0, 4, 5], [0, 0, 6]])
    b = ExactMatrix.from_rows(QQ_FIELD, [[0, 1, 0], [0, 0, 7], [0, 0, 0]])
    assert transpose_element(shape, a @ b) == transpose_element(shape, b) @ transpose_element(shape, a)


def test_leq_c():
    assert leq_c(bv(2, 2), bv(1, 3, 1, 2))
    assert not leq_c(bv(2, 2), bv(1, 3, 1, 1))
    assert leq_c(bv(1,), bv(5,))
    assert not leq_c(bv(1, 1), bv(5,))


def test_coarsenings_of_three_blocks():
    found = set(c.blocks for c in coarsenings(bv(1, 2, 3)))
    assert found == {(1, 2, 3), (3, 3), (1, 5), (6,)}


def test_merge_cuts():
    assert merge_cuts(bv(1, 2, 3), bv(3, 3)) == [(0, 2), (2, 3)]
    assert merge_cuts(bv(1, 2, 3), bv(2, 4)) == []


@pytest.mark.parametrize("n", range(1, 9))
def test_compositions_count(n):
    found = list(compositions(n))
    assert len(found) == 2 ** (n - 1)
    assert len(set(found)) == len(found)


def test_dimensions():
    assert dim_parabolic(bv(1, 1, 1)) == 6
    assert dim_nilradical(bv(1, 1, 1)) == 3
    assert dim_nilradical(bv(2, 2, 2)) == 12
    assert dim_parabolic(bv(4,)) == 16
