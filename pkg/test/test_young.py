"""Labeled Young diagrams, admissible moves and the reduction algorithm."""

import pytest

from src.algebra.field import QQ_FIELD, gf
from src.algebra.jordan import jordan_matrix
from src.algebra.linalg import span
from src.algebra.matrix import ExactMatrix
from src.quiver import is_isomorphic
from src.validation.errors import MovePreconditionViolated, MuTooLarge, NotStable
from src.young import (
    BaseChange,
    LabeledYoungDiagram,
    apply_move,
    check_reduced,
    diagram_from_pair,
    diagram_rep,
    enumerate_reduced,
    extend_check,
    is_injective_diagram,
    move_B,
    move_C,
    move_M,
    pair_rep,
    random_stable_pair,
    reduce,
    reduced_census,
    reduction_case,
    replay,
)

from conftest import full_only

# (lambda, mu) shapes covering the three reduction cases
SHAPES = [
    ((2, 1), (1,)),
    ((3, 2, 1), (2, 1)),
    ((2, 2, 2), (2, 2, 1)),
    ((2, 1, 1), (1, 1, 1)),
    ((4, 2), (3, 1)),
    ((5, 1), (4,)),
    ((3, 1, 1), (3, 1, 1)),
    ((3, 3, 1), (3, 2)),
    ((4, 2, 1), (3, 2)),
]


def tops_diagram(lam, mu, field, tops):
    return LabeledYoungDiagram.from_tops(lam, mu, field, tops)


# ----------------------------------------------------------------------
# Diagrams of pairs
# ----------------------------------------------------------------------
def test_diagram_of_kernel_line():
    f = jordan_matrix(QQ_FIELD, (2,))
    u = span(QQ_FIELD, 2, [(QQ_FIELD(1), QQ_FIELD(0))])
    d = diagram_from_pair(u, 2, f)
    assert d.lam == (2,) and d.mu == (1,)
    assert d.entry(1, 1, 1) != 0
    assert d.entry(1, 2, 1) == 0


def test_unstable_subspace_is_rejected():
    f = jordan_matrix(QQ_FIELD, (2,))
    u = span(QQ_FIELD, 2, [(QQ_FIELD(0), QQ_FIELD(1))])
    with pytest.raises(NotStable):
        diagram_from_pair(u, 2, f)


def test_tops_must_respect_mu():
    with pytest.raises(ValueError):
        tops_diagram((2,), (1,), QQ_FIELD, [{(1, 2): 1}])


def test_dict_round_trip_and_render():
    d = tops_diagram((2, 1), (1,), QQ_FIELD, [{(1, 1): "1/2", (2, 1): 3}])
    assert LabeledYoungDiagram.from_dict(d.to_dict()) == d
    assert d.render() == ["(1/2) 0", "(3)"]


@pytest.mark.parametrize("lam,mu", SHAPES)
def test_random_pairs_have_requested_types(lam, mu, rng):
    u, f = random_stable_pair(lam, mu, QQ_FIELD, rng)
    d = diagram_from_pair(u, f.rows, f)
    assert d.lam == lam and d.mu == mu
    assert is_injective_diagram(d)


def test_random_pair_needs_mu_inside_lambda(rng):
    with pytest.raises(ValueError):
        random_stable_pair((2,), (3,), QQ_FIELD, rng)


# ----------------------------------------------------------------------
# Moves
# ----------------------------------------------------------------------
def test_move_M_divides_the_row():
    d = tops_diagram((2, 1), (1,), QQ_FIELD, [{(1, 1): 1, (2, 1): 3}])
    after = apply_move(d, move_M(d, 1, 2))
    assert after.entry(1, 1, 1) == QQ_FIELD("1/2")
    assert after.entry(2, 1, 1) == QQ_FIELD(3)


def test_move_C_clears_the_quadrant():
    d = tops_diagram((2, 1), (1,), QQ_FIELD, [{(1, 1): 1, (2, 1): 1}])
    after = apply_move(d, move_C(d, 2, 1, 1))
    assert after.entry(1, 1, 1) == 0
    assert after.entry(2, 1, 1) == 1


def test_move_C_needs_unit_pivot():
    d = tops_diagram((2, 1), (1,), QQ_FIELD, [{(1, 1): 1, (2, 1): 2}])
    with pytest.raises(MovePreconditionViolated) as info:
        apply_move(d, move_C(d, 2, 1, 1))
    assert info.value.detail["clause"] == "pivot"


def test_move_B_needs_column_two_or_later():
    d = tops_diagram((3, 2), (2,), QQ_FIELD, [{(1, 2): 1, (2, 1): 1}])
    with pytest.raises(MovePreconditionViolated):
        apply_move(d, move_B(d, (1, 2), (2, 1), 1))


def test_non_admissible_matrix_is_refused():
    bad = ExactMatrix.from_rows(QQ_FIELD, [[1, 0], [1, 1]])
    with pytest.raises(MovePreconditionViolated) as info:
        BaseChange("V", "M", {"i": 1, "omega": 1}, (2,), bad)
    assert info.value.detail["clause"] == "stab"


def test_move_built_for_another_shape_is_refused():
    d = tops_diagram((2, 1), (1,), QQ_FIELD, [{(2, 1): 1}])
    other = tops_diagram((3,), (1,), QQ_FIELD, [{(1, 1): 1}])
    with pytest.raises(MovePreconditionViolated):
        apply_move(d, move_M(other, 1, 2))


# ----------------------------------------------------------------------
# Reduction
# ----------------------------------------------------------------------
@pytest.mark.parametrize(
    "mu,case",
    [((), "a"), ((2, 2, 1), "a"), ((1, 1), "a"), ((4, 1), "b"), ((3,), "b"), ((3, 2), "c")],
)
def test_reduction_case(mu, case):
    assert reduction_case(mu) == case


def test_reduction_case_out_of_range():
    with pytest.raises(MuTooLarge):
        reduction_case((3, 3))


def test_check_reduced_flags_repeated_unit():
    d = tops_diagram((2, 1), (1,), QQ_FIELD, [{(1, 1): 1, (2, 1): 1}])
    ok, violations = check_reduced(d)
    assert not ok
    assert any(v["clause"] == 4 for v in violations)


@pytest.mark.parametrize("field_label", ["Q", "GF(3)"])
@pytest.mark.parametrize("lam,mu", SHAPES)
def test_reduce_random_pairs(lam, mu, field_label, rng):
    field = QQ_FIELD if field_label == "Q" else gf(3)
    for _ in range(3):
        u, f = random_stable_pair(lam, mu, field, rng)
        d = diagram_from_pair(u, f.rows, f)
        reduced, moves = reduce(d)
        ok, violations = check_reduced(reduced)
        assert ok, violations
        assert (reduced.lam, reduced.mu) == (lam, mu)
        assert replay(d, moves) == reduced
        assert is_injective_diagram(reduced)


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


# every (lambda, mu) with |lambda| <= 6 and 1 <= |mu| <= 5
SHAPE_POOL = [
    (lam, mu)
    for k in range(1, 7)
    for lam in _partitions(k)
    for l in range(1, min(k, 5) + 1)
    for mu in _partitions(l)
    if len(mu) <= len(lam) and all(m <= p for m, p in zip(mu, lam))
]


def reduce_many(count, field, rng, compare_every):
    for index in range(count):
        lam, mu = rng.choice(SHAPE_POOL)
        u, f = random_stable_pair(lam, mu, field, rng)
        d = diagram_from_pair(u, f.rows, f)
        reduced, moves = reduce(d)
        ok, violations = check_reduced(reduced)
        assert ok, (lam, mu, violations)
        assert (reduced.lam, reduced.mu) == (lam, mu)
        assert replay(d, moves) == reduced
        if index % compare_every == 0:
            assert is_isomorphic(pair_rep(u, f), diagram_rep(reduced), seed=index), (lam, mu)


@pytest.mark.parametrize("field_label", ["Q", "GF(5)"])
def test_reduce_pairs_of_mixed_shapes(field_label, rng):
    field = QQ_FIELD if field_label == "Q" else gf(5)
    reduce_many(40, field, rng, compare_every=8)


@full_only
@pytest.mark.parametrize("field_label", ["Q", "GF(5)"])
def test_reduce_five_hundred_pairs(field_label, rng):
    field = QQ_FIELD if field_label == "Q" else gf(5)
    reduce_many(500, field, rng, compare_every=10)


def test_reduce_refuses_large_mu():
    d = tops_diagram((6,), (6,), QQ_FIELD, [{(1, 6): 1}])
    with pytest.raises(MuTooLarge):
        reduce(d)


def test_reducing_a_reduced_diagram_keeps_it_reduced():
    d = tops_diagram((2, 1), (1,), QQ_FIELD, [{(2, 1): 1}])
    assert check_reduced(d)[0]
    reduced, moves = reduce(d)
    assert check_reduced(reduced)[0]
    assert replay(d, moves) == reduced


# ----------------------------------------------------------------------
# Enumeration
# ----------------------------------------------------------------------
def test_enumerate_smallest_case():
    assert len(enumerate_reduced((2,), (1,))) == 2


@pytest.mark.parametrize("lam,mu", [((3, 2, 1), (2, 1)), ((3, 2), (3, 2)), ((2, 2, 1), (1, 1, 1))])
def test_enumerated_diagrams_are_reduced(lam, mu):
    diagrams = enumerate_reduced(lam, mu)
    assert diagrams
    for d in diagrams:
        assert check_reduced(d)[0]


def test_census_keys_fit_inside_lambda():
    census = reduced_census(3, 1)
    assert set(census) == {"[3]|[1]", "[2, 1]|[1]", "[1, 1, 1]|[1]"}
    assert all(count >= 1 for count in census.values())


def test_enumeration_refuses_large_mu():
    with pytest.raises(MuTooLarge):
        enumerate_reduced((6,), (6,))


# ----------------------------------------------------------------------
# Extensions
# ----------------------------------------------------------------------
def test_right_functional_normal_form():
    d = tops_diagram((2, 1), (1,), QQ_FIELD, [{(2, 1): 1}])
    report = extend_check("right_functional", d, [0, 1, 0])
    assert report.case == "top"
    assert report.normalized == {"i_bullet": 1, "part": 2}
    assert report.class_count == 2
    assert report.notes == []


def test_right_functional_must_vanish_on_U():
    d = tops_diagram((2, 1), (1,), QQ_FIELD, [{(2, 1): 1}])
    with pytest.raises(NotStable):
        extend_check("right_functional", d, [0, 0, 1])
    with pytest.raises(NotStable):
        extend_check("right_functional", d, [1, 0, 0])
    with pytest.raises(ValueError):
        extend_check("sideways", d, [])


def zero_diagram(lam, mu):
    return tops_diagram(lam, mu, QQ_FIELD, [{} for _ in mu])


def test_left_vector_short_chains():
    report = extend_check("left_vector", zero_diagram((2, 2), (1, 1)), [1, 0])
    assert report.case == "a"
    assert report.normalized == {"epsilon": [1, 0]}
    assert report.class_count == 4


def test_left_functional_long_chain_goes_generic():
    report = extend_check("left_functional", zero_diagram((3, 1), (3, 1)), [0, 1])
    assert report.case == "b-generic"
    assert report.class_count == 3


def test_flag_in_a_single_chain_is_forced():
    d = zero_diagram((3,), (3,))
    report = extend_check("flag", d, {"U_prime": [[1, 0, 0], [0, 1, 0]], "U_double_prime": [[1, 0, 0]]})
    assert report.case == "forced"
    assert report.class_count == 1
    with pytest.raises(NotStable):
        extend_check("flag", d, {"U_prime": [[1, 0, 0], [0, 1, 0]], "U_double_prime": [[0, 1, 0]]})


def test_flag_through_the_kernel():
    d = zero_diagram((2, 1), (2, 1))
    report = extend_check("flag", d, {"U_prime": [[1, 0, 0], [0, 0, 1]], "U_double_prime": [[1, 0, 0]]})
    assert report.case == "kernel"
    assert report.normalized == {"epsilon": [1, 0]}
