"""Named families, the commuting pair and distinguished elements."""

import pytest

from src.algebra.field import QQ_FIELD, gf
from src.algebra.jordan import jordan_matrix
from src.algebra.matrix import ExactMatrix
from src.families import (
    build_family_member,
    certify_family,
    centralizer_in_p,
    commuting_pair,
    commuting_pair_report,
    distinguished_census,
    family_grid_rep,
    family_spec,
    get_all_families,
    get_enabled_families,
    is_distinguished,
    member_matrix,
    symbolic_checks,
)
from src.families.builders import entries_in_01t
from src.parabolic.shape import BlockVector, dims_of, in_nilpotent_cone
from src.quiver import is_isomorphic, matrix_to_rep, push_down, rep_to_matrix
from src.validation.errors import InfiniteType, NotInCone, NotInParabolic, ParamOutOfRange

from conftest import full_only


def shape_of(*blocks):
    return dims_of(BlockVector(tuple(blocks)))


# ----------------------------------------------------------------------
# Registry and specs
# ----------------------------------------------------------------------
def test_registry_order():
    names = list(get_all_families())
    assert names[0] == "levi_nilr_111"
    assert names[-1] == "commuting_pair"
    assert set(get_enabled_families()) <= set(names)


def test_family_spec_lookup():
    spec = family_spec("d4_222")
    assert spec.bv == BlockVector((2, 2, 2))
    assert spec.acting == "P"
    assert spec.field == gf(5)
    assert family_spec("d4_222", field="Q").field == QQ_FIELD


def test_parametric_family_sizes():
    spec = family_spec("ext_kk", k=7, n=14)
    assert spec.bv == BlockVector((7, 7))
    assert spec.to_dict()["params"] == {"k": 7, "n": 14}
    with pytest.raises(ParamOutOfRange):
        family_spec("ext_kk", k=5, n=12)
    with pytest.raises(ParamOutOfRange):
        family_spec("commuting_pair", k=6, n=11)
    with pytest.raises(ValueError):
        family_spec("e8_hidden")


@pytest.mark.parametrize("name", ["d4_222", "e6_66", "e6_414", "e6_146", "e6_1441", "e6_1214", "e6_12121"])
def test_grid_members_land_in_the_cone(name):
    spec = family_spec(name)
    m = member_matrix(spec, 2)
    assert m.rows == spec.bv.n
    assert in_nilpotent_cone(spec.shape, m)


# ----------------------------------------------------------------------
# Certificates
# ----------------------------------------------------------------------
def test_levi_nilradical_family_is_certified():
    certificate = certify_family(family_spec("levi_nilr_111"))
    assert certificate.passed, [c.to_dict() for c in certificate.failures()]
    assert {c.name for c in certificate.checks} == {
        "membership", "entries_in_01t", "pairwise_non_isomorphic", "oracle_orbits",
    }
    assert certificate.details["oracle"]["orbit_count"] == 13
    assert len(set(certificate.details["oracle"]["member_orbits"])) == 7
    assert certificate.validate() == []


def test_d4_family_is_certified():
    certificate = certify_family(family_spec("d4_222"), oracle=False)
    assert certificate.passed, [c.to_dict() for c in certificate.failures()]
    assert certificate.check("covering_injective").passed
    assert certificate.check("entries_in_01t").passed


def test_d4_members_have_entries_in_01t():
    spec = family_spec("d4_222", field="GF(7)")
    for t in range(2, 7):
        m = member_matrix(spec, t)
        assert in_nilpotent_cone(spec.shape, m)
        assert entries_in_01t(m, t)
    # the plain adapted basis has a 1 - t entry
    _, plain = rep_to_matrix(push_down(family_grid_rep(spec, 3)))
    assert not entries_in_01t(plain, 3)
    closed = member_matrix(spec, 3)
    assert is_isomorphic(matrix_to_rep(spec.shape, plain), matrix_to_rep(spec.shape, closed))


def test_repeated_parameter_is_caught():
    certificate = certify_family(family_spec("levi_nilr_111"), sample=[2, 2], oracle=False)
    assert not certificate.passed
    clash = certificate.check("pairwise_non_isomorphic")
    assert clash.witness == {"pairs": [[2, 2]]}


def test_commuting_pair_certificate():
    certificate = certify_family(family_spec("commuting_pair"))
    assert certificate.passed, [c.to_dict() for c in certificate.failures()]
    names = [c.name for c in certificate.checks]
    assert names == ["commutator_identity", "U_stable", "membership", "commute", "cyclic_vector"]


@full_only
@pytest.mark.parametrize("name", ["e6_66", "e6_414", "e6_146", "e6_1441", "e6_1214", "e6_12121", "levi_cone_22"])
def test_full_size_families(name):
    assert certify_family(family_spec(name)).passed


# ----------------------------------------------------------------------
# Commuting pair
# ----------------------------------------------------------------------
@pytest.mark.parametrize("n,k", [(12, 6), (13, 6), (13, 7)])
def test_commuting_pair_identities_in_t(n, k):
    checks = symbolic_checks(n, k)
    assert checks["commutator_zero"]
    assert checks["x_preserves_U"]
    assert checks["y_preserves_U"]


def test_commuting_pair_over_a_prime_field():
    f = gf(101)
    x, y = commuting_pair(f, 12, 6, 3)
    assert x.commutator(y).is_zero()
    shape = shape_of(6, 6)
    assert in_nilpotent_cone(shape, x)
    assert in_nilpotent_cone(shape, y)
    assert build_family_member(family_spec("commuting_pair"), 3) == (x, y)


def test_commuting_pair_report():
    report = commuting_pair_report(12, 6, q=101, samples=3)
    assert report.validate() == []
    assert len(report.sampled) == 3
    assert report.not_in_cone == []
    assert report.to_dict()["alpha"] == "t"


def test_commuting_pair_rejects_small_blocks():
    with pytest.raises(ParamOutOfRange):
        commuting_pair(gf(101), 11, 5, 1)


# ----------------------------------------------------------------------
# Distinguished elements
# ----------------------------------------------------------------------
def test_regular_nilpotent_is_distinguished():
    shape = shape_of(3)
    verdict, tag = is_distinguished(shape, jordan_matrix(QQ_FIELD, (3,)))
    assert verdict
    assert tag == "centralizer+quiver"


def test_split_nilpotent_is_not_distinguished():
    shape = shape_of(3)
    assert not is_distinguished(shape, jordan_matrix(QQ_FIELD, (2, 1)))[0]
    assert not is_distinguished(shape, jordan_matrix(QQ_FIELD, (2, 1)), method="centralizer_algebra")[0]


def test_distinguished_needs_a_cone_element():
    shape = shape_of(1, 1)
    with pytest.raises(NotInCone):
        is_distinguished(shape, ExactMatrix.from_rows(QQ_FIELD, [[0, 0], [1, 0]]))
    with pytest.raises(ValueError):
        is_distinguished(shape, ExactMatrix.zeros(QQ_FIELD, 2, 2), method="guess")


def test_centralizer_needs_parabolic_element():
    with pytest.raises(NotInParabolic):
        centralizer_in_p(shape_of(1, 1), ExactMatrix.from_rows(QQ_FIELD, [[0, 0], [1, 0]]))


def test_centralizer_of_borel_line():
    space = centralizer_in_p(shape_of(1, 1), ExactMatrix.from_rows(QQ_FIELD, [[0, 1], [0, 0]]))
    assert space.dim == 2


@pytest.mark.parametrize("blocks,q,count", [((1,), 2, 1), ((2,), 3, 1), ((1, 1), 3, 1)])
def test_distinguished_census(blocks, q, count):
    census = distinguished_census(shape_of(*blocks), q)
    assert census.count == count
    assert census.discrepant == []


def test_census_flags_characteristic_dividing_n():
    census = distinguished_census(shape_of(1, 1), 2)
    assert census.count == 1
    assert census.flags


def test_census_refuses_infinite_type():
    with pytest.raises(InfiniteType):
        distinguished_census(shape_of(2, 2, 2), 2)


def test_census_finds_the_regular_orbit():
    census = distinguished_census(shape_of(1, 2), 2)
    assert census.count == 1
    assert census.flags == []
