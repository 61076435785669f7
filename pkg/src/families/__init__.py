"""Named infinite families, commuting pairs and distinguished elements."""

from src.families.builders import (
    FAMILY_NAMES,
    PARAMETRIC_FAMILIES,
    FamilySpec,
    build_family_member,
    family_grid_rep,
    family_spec,
    member_matrix,
)
from src.families.certify import certify_family
from src.families.commuting import (
    CommutingPairReport,
    commuting_pair,
    commuting_pair_report,
    symbolic_checks,
)
from src.families.distinguished import (
    DistinguishedCensus,
    centralizer_basis,
    centralizer_in_p,
    distinguished_census,
    is_distinguished,
)
from src.families.registry import get_all_families, get_enabled_families

__all__ = [
    "FAMILY_NAMES",
    "PARAMETRIC_FAMILIES",
    "FamilySpec",
    "build_family_member",
    "family_grid_rep",
    "family_spec",
    "member_matrix",
    "certify_family",
    "CommutingPairReport",
    "commuting_pair",
    "commuting_pair_report",
    "symbolic_checks",
    "DistinguishedCensus",
    "centralizer_basis",
    "centralizer_in_p",
    "distinguished_census",
    "is_distinguished",
    "get_all_families",
    "get_enabled_families",
]
