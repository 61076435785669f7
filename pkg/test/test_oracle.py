"""
Tests for the finite-field orbit oracle.

Small cases are counted by hand; the representation-side count must
reproduce the oracle's partition exactly.
"""

import pytest

from src.algebra.field import gf
from src.algebra.matrix import ExactMatrix
from src.oracle import (
    FINITE_SIGNAL,
    INFINITE_SIGNAL,
    MIXED_SIGNAL,
    count_rep_classes,
    enumerate_orbits,
    growth_profile,
    growth_signal,
    rep_of,
    target_codec,
)
from src.parabolic.shape import BlockVector, compositions, dims_of
from src.validation.errors import BudgetExceeded, FieldNotSupported

from conftest import full_only


def shape_of(*blocks):
    return dims_of(BlockVector(tuple(blocks)))


def M(q, rows):
    return ExactMatrix.from_rows(gf(q), rows)


# ----------------------------------------------------------------------
# Orbit tables
# ----------------------------------------------------------------------
def test_borel_of_gl2():
    table = enumerate_orbits(shape_of(1, 1), 2)
    assert table.orbit_count == 2
    assert table.target_size == 2
    assert table.validate() == []


def test_nilpotent_cone_of_gl2():
    table = enumerate_orbits(shape_of(2), 2)
    assert table.target_size == 4
    assert table.orbit_count == 2
    assert table.orbit_sizes == [1, 3]
    assert table.representatives[0].is_zero()


def test_borel_of_gl3_has_five_orbits():
    table = enumerate_orbits(shape_of(1, 1, 1), 2)
    assert table.target_size == 8
    assert table.orbit_count == 5
    assert sorted(table.orbit_sizes) == [1, 1, 2, 2, 2]
    assert table.validate() == []


def test_orbit_lookup():
    table = enumerate_orbits(shape_of(2), 2)
    zero = M(2, [[0, 0], [0, 0]])
    assert table.orbit_of(zero) == 0
    assert table.orbit_of(M(2, [[1, 1], [1, 1]])) == 1
    assert table.representative_of(M(2, [[0, 0], [1, 0]])) == table.representatives[1]
    with pytest.raises(ValueError):
        table.orbit_of(M(2, [[1, 0], [0, 1]]))


def test_table_to_dict():
    data = enumerate_orbits(shape_of(1, 1), 3).to_dict()
    assert data["bv"] == [1, 1]
    assert data["q"] == 3
    assert data["orbit_count"] == 2
    assert sum(orbit["size"] for orbit in data["orbits"]) == data["target_size"] == 3


def test_levi_on_nilradical_is_a_torus_action():
    assert enumerate_orbits(shape_of(1, 1, 1), 2, "nilradical", "Levi").orbit_count == 8
    assert enumerate_orbits(shape_of(1, 1, 1), 3, "nilradical", "Levi").orbit_count == 9


def test_bounded_cone_drops_regular_orbit():
    assert enumerate_orbits(shape_of(1, 1, 1), 2, "cone_x", x=2).orbit_count == 4


# ----------------------------------------------------------------------
# Refusals
# ----------------------------------------------------------------------
def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        enumerate_orbits(shape_of(1, 1, 1, 1), 5, budget=100)


def test_non_prime_order_is_refused():
    with pytest.raises(FieldNotSupported):
        enumerate_orbits(shape_of(1, 1), 4)


def test_target_and_group_names_are_checked():
    with pytest.raises(ValueError):
        target_codec(shape_of(1, 1), 2, "cone_x")
    with pytest.raises(ValueError):
        target_codec(shape_of(1, 1), 2, "everything")
    with pytest.raises(ValueError):
        enumerate_orbits(shape_of(1, 1), 2, acting="GL")


# ----------------------------------------------------------------------
# Growth
# ----------------------------------------------------------------------
@pytest.mark.parametrize(
    "counts,signal",
    [([3, 3, 3], FINITE_SIGNAL), ([2, 5, 9], INFINITE_SIGNAL), ([2, 5, 5], MIXED_SIGNAL), ([4], MIXED_SIGNAL)],
)
def test_growth_signal(counts, signal):
    assert growth_signal(counts) == signal


def test_growth_profile_constant_for_borel_of_gl2():
    profile = growth_profile(shape_of(1, 1))
    assert profile.counts == [(2, 2), (3, 2), (5, 2)]
    assert profile.signal == FINITE_SIGNAL
    assert profile.flags == []


def test_growth_profile_torus_grows():
    profile = growth_profile(shape_of(1, 1, 1), "nilradical", "Levi")
    assert [c for _, c in profile.counts] == [8, 9, 11]
    assert profile.signal == INFINITE_SIGNAL


# ----------------------------------------------------------------------
# Representation-side counts
# ----------------------------------------------------------------------
@pytest.mark.parametrize("blocks", [(1, 1), (2,), (1, 2), (2, 1), (1, 1, 1), (3,)])
def test_rep_classes_match_orbits(blocks):
    shape = shape_of(*blocks)
    table = enumerate_orbits(shape, 2)
    classes = count_rep_classes(shape, 2)
    assert classes.class_count == table.orbit_count
    assert classes.same_partition(table.roots)


def test_levi_rep_classes_match_orbits():
    shape = shape_of(1, 1, 1)
    table = enumerate_orbits(shape, 2, "nilradical", "Levi")
    classes = count_rep_classes(shape, 2, "nilradical", "Levi")
    assert classes.class_count == 8
    assert classes.same_partition(table.roots)


def test_p_on_nilradical_has_no_rep_model():
    with pytest.raises(ValueError):
        rep_of(shape_of(1, 1), M(2, [[0, 1], [0, 0]]), "nilradical", "P")


@full_only
def test_growth_profile_constant_for_finite_type():
    profile = growth_profile(shape_of(1, 2, 1))
    assert profile.signal == FINITE_SIGNAL


@pytest.mark.parametrize("n", [1, 2, 3])
def test_counts_do_not_depend_on_q_for_small_n(n):
    for blocks in compositions(n):
        profile = growth_profile(dims_of(blocks))
        assert profile.signal == FINITE_SIGNAL, f"{blocks}: {profile.counts}"


@full_only
def test_counts_do_not_depend_on_q_for_n_four():
    checked = 0
    for blocks in compositions(4):
        try:
            profile = growth_profile(dims_of(blocks))
        except BudgetExceeded:
            continue
        assert profile.signal == FINITE_SIGNAL, f"{blocks}: {profile.counts}"
        checked += 1
    assert checked
