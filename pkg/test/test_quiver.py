"""Quiver presets, representations, covering grids and the matrix <-> rep translation."""

import json

import pytest

from config.io_paths import AR_FIXTURES_DIR
from src.algebra.field import QQ_FIELD, gf
from src.algebra.linalg import full_space
from src.algebra.matrix import ExactMatrix
from src.parabolic.shape import BlockVector, dims_of
from src.quiver import (
    QuiverPreset,
    QuiverRep,
    covering_preset,
    delta_filtration,
    dimension_grid,
    direct_sum,
    drop_top_row,
    endomorphism_local,
    hom_space,
    horizontal_injective,
    is_indecomposable,
    is_isomorphic,
    levi_preset,
    levi_rep,
    matrix_to_rep,
    phi_quotient,
    push_down,
    qp_preset,
    quotient,
    rep_from_grid,
    rep_to_matrix,
    shift,
    standard_modules,
    trace_of_tilting,
    transform,
)
from src.validation.errors import (
    FieldNotSupported,
    IndexOutOfGrid,
    NotDeltaFiltered,
    NotInCone,
    NotInjectiveArrows,
    RelationViolation,
    SizeMismatch,
)

from conftest import full_only


def load_modules(name):
    data = json.loads((AR_FIXTURES_DIR / name).read_text())
    return [
        (entry, rep_from_grid(QQ_FIELD, entry["grid"], data["x"], entry.get("maps")))
        for entry in data["modules"]
    ]


def M(field, rows):
    return ExactMatrix.from_rows(field, rows)


# ----------------------------------------------------------------------
# Presets and construction
# ----------------------------------------------------------------------
def test_preset_structure():
    qp = qp_preset(3, 2)
    assert qp.vertices == (1, 2, 3)
    assert set(qp.arrows) == {"beta_1", "beta_2", "beta_3", "alpha_1", "alpha_2"}
    grid = covering_preset(2, 3)
    assert grid.x == 3
    assert len(grid.vertices) == 6
    assert grid.arrows["beta_1_2"] == ((1, 2), (2, 2))
    assert QuiverPreset.from_dict(grid.to_dict()) == grid


def test_preset_rejects_bad_parameters():
    with pytest.raises(ValueError):
        QuiverPreset("Qp", 0, 1)
    with pytest.raises(ValueError):
        QuiverPreset("Qp", 2, 1, n_rows=3)
    with pytest.raises(ValueError):
        QuiverPreset("tree", 2, 1)


def test_relations_are_enforced():
    preset = qp_preset(1, 1)
    with pytest.raises(RelationViolation):
        QuiverRep.build(preset, QQ_FIELD, {1: 2}, {"beta_1": M(QQ_FIELD, [[0, 1], [0, 0]])})


def test_map_shapes_are_enforced():
    with pytest.raises(SizeMismatch):
        QuiverRep.build(qp_preset(2, 2), QQ_FIELD, {1: 1, 2: 2}, {"alpha_1": M(QQ_FIELD, [[1, 0]])})


def test_grid_commutativity_is_enforced():
    with pytest.raises(RelationViolation):
        rep_from_grid(QQ_FIELD, [[1, 1], [1, 1]], maps={"alpha_2_1": [[0]]})


# ----------------------------------------------------------------------
# Standard modules
# ----------------------------------------------------------------------
def test_standard_module_supports():
    modules = standard_modules(covering_preset(2, 3), QQ_FIELD)
    assert dimension_grid(modules.T(2, 2)) == [[0, 1], [0, 1], [0, 0]]
    assert dimension_grid(modules.D(2, 1)) == [[0, 0], [1, 1], [0, 0]]
    assert dimension_grid(modules.P(2, 2)) == [[0, 0], [0, 1], [0, 1]]
    assert dimension_grid(modules.nabla(2, 1)) == [[1, 0], [1, 0], [0, 0]]
    with pytest.raises(IndexOutOfGrid):
        modules.T(4, 1)


def test_tilting_fixtures_match_T():
    modules = standard_modules(covering_preset(2, 3), QQ_FIELD)
    tagged = [(entry, r) for entry, r in load_modules("grid_2x3_example.json") if "tilting" in entry]
    assert tagged
    for entry, r in tagged:
        assert is_isomorphic(r, modules.T(*entry["tilting"]))


# ----------------------------------------------------------------------
# Indecomposables
# ----------------------------------------------------------------------
@pytest.mark.parametrize("name", ["grid_2x3_example.json", "grid_2x2_middle.json"])
def test_fixture_modules_are_indecomposable(name):
    for entry, r in load_modules(name):
        assert endomorphism_local(r), f"{entry['grid']} is not indecomposable"


def test_decomposable_grid_is_detected():
    r = rep_from_grid(QQ_FIELD, [[0, 1], [1, 0]], 2)
    assert not endomorphism_local(r)
    left = rep_from_grid(QQ_FIELD, [[0, 1], [0, 0]], 2)
    right = rep_from_grid(QQ_FIELD, [[0, 0], [1, 0]], 2)
    assert is_isomorphic(direct_sum(left, right), r)


def test_indecomposable_over_finite_field():
    r = rep_from_grid(gf(2), [[1, 1], [1, 1]])
    assert is_indecomposable(r)
    with pytest.raises(FieldNotSupported):
        endomorphism_local(r)


# ----------------------------------------------------------------------
# Trace of T and phi
# ----------------------------------------------------------------------
def test_in_HT_means_first_row_zero():
    for entry, r in load_modules("grid_2x3_example.json"):
        first_row_zero = all(d == 0 for d in dimension_grid(r)[0])
        assert entry["in_HT"] == first_row_zero


def test_trace_of_T_vanishes_exactly_on_HT():
    for entry, r in load_modules("grid_2x3_example.json"):
        trace = trace_of_tilting(r)
        total = sum(space.dim for space in trace.values())
        if entry["in_HT"]:
            assert total == 0
        else:
            assert total > 0


def test_phi_of_filtered_modules_drops_the_first_row():
    for entry, r in load_modules("grid_2x3_example.json"):
        if not horizontal_injective(r):
            continue
        phi = phi_quotient(r)
        assert phi.preset.n_rows == r.preset.n_rows - 1, entry["grid"]
        assert all(phi.evaluate_relation(rel).is_zero() for rel in phi.preset.relations)
        assert phi.total_dim + sum(s.dim for s in trace_of_tilting(r).values()) == r.total_dim


def test_phi_of_tilting_is_zero():
    modules = standard_modules(covering_preset(2, 2), QQ_FIELD)
    assert phi_quotient(modules.T(2, 1)).is_zero()
    assert phi_quotient(modules.D(1, 1)).is_zero()
    smaller = standard_modules(covering_preset(2, 1), QQ_FIELD)
    assert phi_quotient(modules.D(2, 1)) == smaller.D(1, 1)


def test_phi_keeps_the_grid_of_unfiltered_input():
    r = rep_from_grid(QQ_FIELD, [[1, 0], [0, 0]])
    assert phi_quotient(r).preset == r.preset


# ----------------------------------------------------------------------
# Delta-filtrations
# ----------------------------------------------------------------------
def test_delta_filtration_of_T():
    modules = standard_modules(covering_preset(2, 2), QQ_FIELD)
    assert delta_filtration(modules.T(2, 1)) == [(1, 1), (2, 1)]


def test_delta_filtration_lengths_add_up():
    for entry, r in load_modules("grid_2x3_example.json"):
        if not horizontal_injective(r):
            continue
        labels = delta_filtration(r)
        p = r.preset.p
        assert sum(p - y + 1 for _, y in labels) == r.total_dim


def test_delta_filtration_needs_injective_rows():
    r = rep_from_grid(QQ_FIELD, [[1, 0]])
    with pytest.raises(NotDeltaFiltered):
        delta_filtration(r)


def random_invertible(field, n, rng):
    while True:
        m = M(field, [[rng.randrange(field.order) for _ in range(n)] for _ in range(n)])
        if m.is_invertible():
            return m


def random_filtered_rep(modules, rng):
    """A direct sum of standard, tilting and projective modules in random vertex bases."""
    summands = [(rng.choice("DTP"), rng.choice(modules.labels())) for _ in range(rng.randint(1, 3))]
    r = None
    for kind, label in summands:
        s = modules.build(kind, *label)
        r = s if r is None else direct_sum(r, s)
    changes = {v: random_invertible(modules.field, r.dim(v), rng) for v in r.preset.vertices if r.dim(v)}
    return transform(r, changes), summands


def check_random_filtered_reps(count, rng):
    modules = standard_modules(covering_preset(2, 3), gf(5))
    for _ in range(count):
        r, summands = random_filtered_rep(modules, rng)
        assert horizontal_injective(r)
        labels = delta_filtration(r, verify=True)
        assert sum(2 - y + 1 for _, y in labels) == r.total_dim
        if all(kind == "D" for kind, _ in summands):
            assert sorted(labels) == sorted(label for _, label in summands)
        phi = phi_quotient(r)
        assert phi.preset.n_rows == 2, summands
        assert all(phi.evaluate_relation(rel).is_zero() for rel in phi.preset.relations)
        assert phi.total_dim + sum(s.dim for s in trace_of_tilting(r).values()) == r.total_dim


def test_random_filtered_reps_over_gf5(rng):
    check_random_filtered_reps(12, rng)


@full_only
def test_two_hundred_random_filtered_reps(rng):
    check_random_filtered_reps(200, rng)


# ----------------------------------------------------------------------
# Grid operations
# ----------------------------------------------------------------------
def test_shift_then_drop_is_identity():
    modules = standard_modules(covering_preset(2, 2), QQ_FIELD)
    r = modules.T(2, 1)
    shifted = shift(r, 1)
    assert dimension_grid(shifted) == [[0, 0], [1, 1], [1, 1]]
    assert drop_top_row(shifted) == r
    with pytest.raises(IndexOutOfGrid):
        drop_top_row(r)
    with pytest.raises(IndexOutOfGrid):
        drop_top_row(drop_top_row(shifted))


def test_push_down_sums_columns():
    modules = standard_modules(covering_preset(2, 2), QQ_FIELD)
    pushed = push_down(modules.T(2, 1))
    assert pushed.preset.kind == "Qp"
    assert pushed.dims == (2, 2)
    loop = pushed.maps["beta_1"]
    assert not loop.is_zero() and (loop @ loop).is_zero()


# ----------------------------------------------------------------------
# Matrix <-> representation
# ----------------------------------------------------------------------
def test_matrix_round_trip_is_exact():
    shape = dims_of(BlockVector((1, 2)))
    m = M(QQ_FIELD, [[0, 1, 3], [0, 0, 1], [0, 0, 0]])
    r = matrix_to_rep(shape, m)
    assert r.dims == (1, 3)
    back_shape, back = rep_to_matrix(r)
    assert back_shape.bv == shape.bv
    assert back == m


def test_conjugate_matrices_give_isomorphic_reps():
    f5 = gf(5)
    shape = dims_of(BlockVector((1, 1)))
    m = M(f5, [[0, 1], [0, 0]])
    g = M(f5, [[2, 1], [0, 3]])
    assert is_isomorphic(matrix_to_rep(shape, m), matrix_to_rep(shape, m.conjugate_by(g)))
    assert not is_isomorphic(matrix_to_rep(shape, m), matrix_to_rep(shape, ExactMatrix.zeros(f5, 2, 2)))


def test_transform_preserves_isomorphism_class():
    shape = dims_of(BlockVector((1, 2)))
    r = matrix_to_rep(shape, M(QQ_FIELD, [[0, 1, 0], [0, 0, 1], [0, 0, 0]]))
    changed = transform(r, {2: M(QQ_FIELD, [[1, 2, 0], [0, 1, 0], [1, 0, 1]])})
    assert is_isomorphic(r, changed)


def test_matrix_outside_cone_is_rejected():
    shape = dims_of(BlockVector((1, 1)))
    with pytest.raises(NotInCone):
        matrix_to_rep(shape, M(QQ_FIELD, [[0, 0], [1, 0]]))
    with pytest.raises(NotInCone):
        matrix_to_rep(shape, M(QQ_FIELD, [[0, 1], [0, 0]]), x=1)


def test_non_injective_arrow_is_rejected():
    r = QuiverRep.build(qp_preset(2, 1), QQ_FIELD, {1: 1, 2: 1})
    with pytest.raises(NotInjectiveArrows):
        rep_to_matrix(r)


def test_levi_rep_carries_off_diagonal_blocks():
    shape = dims_of(BlockVector((1, 1, 1)))
    m = M(QQ_FIELD, [[0, 2, 3], [0, 0, 5], [0, 0, 0]])
    r = levi_rep(shape, m, "nilradical")
    assert r.dims == (1, 1, 1)
    assert r.maps["n_1_3"] == M(QQ_FIELD, [[3]])
    assert r.maps["n_2_3"] == M(QQ_FIELD, [[5]])
    with pytest.raises(ValueError):
        levi_rep(shape, m, "borel")


# ----------------------------------------------------------------------
# Homs and quotients
# ----------------------------------------------------------------------
def test_hom_spaces_of_a_split_grid():
    left = rep_from_grid(QQ_FIELD, [[0, 1], [0, 0]], 2)
    right = rep_from_grid(QQ_FIELD, [[0, 0], [1, 0]], 2)
    assert hom_space(left, left).dim == 1
    assert hom_space(left, right).dim == 0
    assert hom_space(direct_sum(left, right), direct_sum(left, right)).dim == 2


def test_quotients():
    shape = dims_of(BlockVector((1, 1)))
    r = matrix_to_rep(shape, M(QQ_FIELD, [[0, 1], [0, 0]]))
    assert is_isomorphic(quotient(r, {}), r)
    everything = {v: full_space(QQ_FIELD, r.dim(v)) for v in r.preset.vertices}
    assert quotient(r, everything).is_zero()
    with pytest.raises(RelationViolation):
        quotient(r, {1: full_space(QQ_FIELD, 1)})


def test_large_hom_space_over_gf2_is_settled_exactly():
    # 2^25 points and only one invertible morphism, so sampling misses it
    preset = levi_preset(25)
    a = QuiverRep.build(preset, gf(2), {v: 1 for v in preset.vertices})
    assert is_isomorphic(a, a)
    b = QuiverRep.build(preset, gf(2), {v: 1 for v in preset.vertices}, {"n_1_2": M(gf(2), [[1]])})
    assert not is_isomorphic(a, b)
