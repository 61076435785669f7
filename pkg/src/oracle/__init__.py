"""Finite-field orbit enumeration: the brute-force ground truth."""

from src.oracle.encoding import TARGETS, TargetCodec, enumerate_members, target_codec
from src.oracle.orbits import (
    ACTING_GROUPS,
    FINITE_SIGNAL,
    INFINITE_SIGNAL,
    MIXED_SIGNAL,
    GrowthProfile,
    OrbitTable,
    enumerate_orbits,
    generator_permutation,
    group_generators,
    growth_profile,
    growth_signal,
)
from src.oracle.rep_classes import RepClassCount, count_rep_classes, rep_of

__all__ = [
    "TARGETS",
    "TargetCodec",
    "enumerate_members",
    "target_codec",
    "ACTING_GROUPS",
    "FINITE_SIGNAL",
    "INFINITE_SIGNAL",
    "MIXED_SIGNAL",
    "GrowthProfile",
    "OrbitTable",
    "enumerate_orbits",
    "generator_permutation",
    "group_generators",
    "growth_profile",
    "growth_signal",
    "RepClassCount",
    "count_rep_classes",
    "rep_of",
]
