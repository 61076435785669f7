"""Exact fields, matrices, echelon forms, Jordan bases and generic nilpotency."""

from fractions import Fraction

import pytest

from src.algebra.field import FieldTag, QQ_FIELD, gf
from src.algebra.jordan import (
    conjugate_partition,
    is_nilpotent,
    jordan_matrix,
    jordan_type,
    nilpotency_index,
    nilpotent_jordan_basis,
    partitions_of,
)
from src.algebra.linalg import intersection, kernel, rank, rref, solve, span
from src.algebra.matrix import ExactMatrix
from src.algebra.nilpotency import flatten, is_nilpotent_subspace
from src.validation.errors import NotNilpotent, SizeMismatch


def M(field, rows):
    return ExactMatrix.from_rows(field, rows)


# ----------------------------------------------------------------------
# Fields
# ----------------------------------------------------------------------
def test_field_labels_parse_round_trip():
    assert FieldTag.parse("Q") == QQ_FIELD
    assert FieldTag.parse("GF(7)") == gf(7)
    assert gf(7).label == "GF(7)"
    assert QQ_FIELD.label == "Q"


def test_non_prime_characteristic_rejected():
    with pytest.raises(ValueError):
        gf(4)


def test_rational_strings_and_reduction_mod_q():
    assert QQ_FIELD.to_plain(QQ_FIELD("3/6")) == "1/2"
    f5 = gf(5)
    assert f5.to_int(f5(7)) == 2
    assert f5.to_int(f5(-1)) == 4
    assert len(list(f5.elements())) == 5
    with pytest.raises(ValueError):
        f5(Fraction(1, 5))


# ----------------------------------------------------------------------
# Matrices
# ----------------------------------------------------------------------
def test_shape_mismatch_raises():
    a = M(QQ_FIELD, [[1, 2]])
    b = M(QQ_FIELD, [[1, 2]])
    with pytest.raises(SizeMismatch):
        a @ b


def test_arithmetic_over_gf2_wraps():
    f2 = gf(2)
    a = M(f2, [[1, 1], [0, 1]])
    assert (a @ a) == ExactMatrix.identity(f2, 2)
    assert (a + a).is_zero()


def test_inverse_and_commutator():
    a = M(QQ_FIELD, [[2, 1], [1, 1]])
    assert a @ a.inverse() == ExactMatrix.identity(QQ_FIELD, 2)
    assert a.commutator(a).is_zero()


# ----------------------------------------------------------------------
# Echelon forms and subspaces
# ----------------------------------------------------------------------
def test_rref_identity_and_zero():
    identity = ExactMatrix.identity(QQ_FIELD, 3)
    assert rref(identity) == (identity, 3)
    zero = ExactMatrix.zeros(QQ_FIELD, 2, 4)
    echelon, r = rref(zero)
    assert r == 0 and echelon.is_zero()


def test_rref_rank_one():
    echelon, r = rref(M(QQ_FIELD, [[1, 2], [2, 4]]))
    assert r == 1
    assert echelon == M(QQ_FIELD, [[1, 2], [0, 0]])


def test_rref_is_idempotent(rng):
    f5 = gf(5)
    for _ in range(20):
        m = M(f5, [[rng.randrange(5) for _ in range(4)] for _ in range(3)])
        once, r = rref(m)
        assert rref(once) == (once, r)


def test_kernel_dimension_matches_rank(rng):
    f5 = gf(5)
    for _ in range(20):
        m = M(f5, [[rng.randrange(5) for _ in range(5)] for _ in range(3)])
        ker = kernel(m)
        assert ker.dim + rank(m) == 5
        for v in ker.vectors:
            assert all(x == f5.zero for x in m.apply(v))


def test_kernel_of_rank_one_matrix():
    ker = kernel(M(QQ_FIELD, [[1, 2], [2, 4]]))
    assert ker.dim == 1
    assert ker.contains((QQ_FIELD(-2), QQ_FIELD(1)))


def vectors(field, rows):
    return [tuple(field(x) for x in row) for row in rows]


def test_span_is_canonical():
    a = span(QQ_FIELD, 3, vectors(QQ_FIELD, [(1, 1, 0), (0, 1, 0)]))
    b = span(QQ_FIELD, 3, vectors(QQ_FIELD, [(1, 0, 0), (2, 3, 0)]))
    assert a == b
    c = span(QQ_FIELD, 3, vectors(QQ_FIELD, [(1, 0, 1), (0, 1, 0)]))
    assert intersection(a, c).dim == 1


def test_solve_returns_none_when_inconsistent():
    m = M(QQ_FIELD, [[1, 1], [2, 2]])
    assert solve(m, (QQ_FIELD(1), QQ_FIELD(3))) is None
    x = solve(m, (QQ_FIELD(1), QQ_FIELD(2)))
    assert m.apply(x) == (QQ_FIELD(1), QQ_FIELD(2))


# ----------------------------------------------------------------------
# Jordan forms
# ----------------------------------------------------------------------
def test_partitions_and_conjugates():
    assert len(partitions_of(5)) == 7
    assert conjugate_partition((3, 1)) == (2, 1, 1)


def test_jordan_type_of_block_sum():
    m = jordan_matrix(QQ_FIELD, (3, 2, 2, 1))
    assert jordan_type(m) == (3, 2, 2, 1)
    assert nilpotency_index(m) == 3


def test_jordan_basis_conjugates_to_normal_form(rng):
    f5 = gf(5)
    j = jordan_matrix(f5, (3, 1))
    for _ in range(10):
        while True:
            g = M(f5, [[rng.randrange(5) for _ in range(4)] for _ in range(4)])
            if g.is_invertible():
                break
        m = g @ j @ g.inverse()
        basis, partition = nilpotent_jordan_basis(m)
        assert partition == (3, 1)
        assert basis.inverse() @ m @ basis == j


def test_jordan_basis_rejects_non_nilpotent():
    with pytest.raises(NotNilpotent):
        nilpotent_jordan_basis(ExactMatrix.identity(QQ_FIELD, 2))


def test_is_nilpotent():
    assert is_nilpotent(M(QQ_FIELD, [[0, 1], [0, 0]]))
    assert not is_nilpotent(M(QQ_FIELD, [[0, 1], [1, 0]]))


# ----------------------------------------------------------------------
# Generic nilpotency
# ----------------------------------------------------------------------
def test_strictly_upper_span_is_nilpotent():
    e12 = ExactMatrix.unit(QQ_FIELD, 3, 3, 0, 1)
    e13 = ExactMatrix.unit(QQ_FIELD, 3, 3, 0, 2)
    e23 = ExactMatrix.unit(QQ_FIELD, 3, 3, 1, 2)
    assert is_nilpotent_subspace([e12, e13, e23])


def test_span_of_e12_e21_is_not_nilpotent():
    e12 = ExactMatrix.unit(QQ_FIELD, 2, 2, 0, 1)
    e21 = ExactMatrix.unit(QQ_FIELD, 2, 2, 1, 0)
    assert not is_nilpotent_subspace([e12, e21])


def test_empty_span_is_nilpotent():
    assert is_nilpotent_subspace([], 3)


def test_nilpotency_of_a_flattened_subspace():
    e12 = ExactMatrix.unit(QQ_FIELD, 3, 3, 0, 1)
    e13 = ExactMatrix.unit(QQ_FIELD, 3, 3, 0, 2)
    e23 = ExactMatrix.unit(QQ_FIELD, 3, 3, 1, 2)
    upper = span(QQ_FIELD, 9, [flatten(e12 + e23), flatten(e13)])
    assert is_nilpotent_subspace(upper, 3)
    swap = span(QQ_FIELD, 4, [flatten(M(QQ_FIELD, [[0, 1], [1, 0]]))])
    assert not is_nilpotent_subspace(swap)
    with pytest.raises(SizeMismatch):
        is_nilpotent_subspace(upper, 2)
    with pytest.raises(SizeMismatch):
        is_nilpotent_subspace(span(QQ_FIELD, 5, []))
