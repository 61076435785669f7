"""
Family Certificates

certify_family builds the members of a family for a sample of t values and
records, without raising, whether

- membership: every member lies in N_p (or n_p),
- entries_in_01t: member entries lie in {0, 1, t},
- pairwise_non_isomorphic: no two members are conjugate under the acting
  group (isomorphism of the attached quiver representations),
- covering_injective: the covering representation has injective
  small-to-big and horizontal arrows (grid-built families only),
- oracle_orbits: members fall into distinct oracle orbits, when the target
  set is small enough to enumerate.

The commuting pair is certified by its own checks (commutator, stability
of U, cyclic vector) since its members are pairs.
"""

from dataclasses import replace
from itertools import combinations
from typing import List, Optional, Sequence, Union

from rich.console import Console
from rich.progress import Progress

from src.algebra.field import FieldTag
from src.core.types import Certificate
from src.families.builders import (
    FamilySpec,
    build_family_member,
    entries_in_01t,
    family_grid_rep,
)
from src.families.commuting import has_cyclic_vector_en, symbolic_checks
from src.families.registry import default_sample
from src.oracle.orbits import enumerate_orbits
from src.oracle.rep_classes import rep_of
from src.parabolic.shape import contains, in_nilpotent_cone
from src.quiver.covering import horizontal_injective, small_to_big_injective
from src.quiver.homs import is_isomorphic
from src.validation.errors import BudgetExceeded


def _pair_isomorphic(a, b, seed) -> bool:
    return is_isomorphic(a, b, seed=seed)


def _in_target(spec: FamilySpec, m) -> bool:
    if spec.target == "nilradical":
        return contains(spec.shape, m, "nilradical")
    return in_nilpotent_cone(spec.shape, m)


def certify_family(
    spec: FamilySpec,
    sample: Sequence = None,
    field: Union[str, FieldTag] = None,
    seed: int = None,
    oracle: bool = True,
    budget: int = None,
    pool=None,
    console: Optional[Console] = None,
) -> Certificate:
    """
    Certify that a family is a one-parameter family of distinct orbits.

    Args:
        spec: the family
        sample: t values (registry default when None)
        field: overrides the family's default field
        seed: seed for the sampled isomorphism tests
        oracle: also compare oracle orbits when the target set is within budget
        budget: oracle search cap
        pool: optional multiprocessing.Pool for the pairwise checks
        console: when given, a progress bar is shown

    Returns:
        Certificate with one check per property and witnesses on failure
    """
    if field is not None:
        spec = replace(spec, field=FieldTag.parse(field))
    values = list(sample) if sample is not None else default_sample(spec.name, spec.field)
    certificate = Certificate(subject=spec.name, field=spec.field.label)
    certificate.details.update({"spec": spec.to_dict(), "sample": [spec.field.to_plain(spec.field(t)) for t in values]})
    members = [build_family_member(spec, t) for t in values]

    if spec.name == "commuting_pair":
        _certify_pairs(certificate, spec, values, members)
        return certificate

    outside = [t for t, m in zip(values, members) if not _in_target(spec, m)]
    certificate.add(
        "membership",
        not outside,
        f"all {len(members)} members in {'n_p' if spec.target == 'nilradical' else 'N_p'}"
        if not outside else f"{len(outside)} members outside the target",
        {"t": outside} if outside else None,
    )
    stray = [t for t, m in zip(values, members) if not entries_in_01t(m, t)]
    certificate.add(
        "entries_in_01t",
        not stray,
        "all entries in {0, 1, t}" if not stray else f"{len(stray)} members with other entries",
        {"t": stray} if stray else None,
    )
    if outside:
        return certificate

    _certify_pairwise(certificate, spec, values, members, seed, pool, console)

    if spec.is_covering_built:
        broken = []
        for t in values:
            r = family_grid_rep(spec, t)
            if not (small_to_big_injective(r) and horizontal_injective(r)):
                broken.append(t)
        certificate.add(
            "covering_injective",
            not broken,
            "small-to-big and horizontal arrows injective" if not broken else "non-injective arrows found",
            {"t": broken} if broken else None,
        )

    if oracle and spec.field.is_finite:
        _certify_with_oracle(certificate, spec, values, members, budget, pool)
    return certificate


def _certify_pairwise(certificate, spec, values, members, seed, pool, console):
    reps = [rep_of(spec.shape, m, spec.target, spec.acting) for m in members]
    pairs = list(combinations(range(len(members)), 2))
    if pool is not None:
        outcomes = pool.starmap(_pair_isomorphic, [(reps[i], reps[j], seed) for i, j in pairs])
    else:
        outcomes = []
        progress = Progress(console=console, transient=True) if console is not None else None
        if progress is not None:
            progress.start()
            task = progress.add_task(f"Comparing {spec.name} members", total=len(pairs))
        try:
            for i, j in pairs:
                outcomes.append(_pair_isomorphic(reps[i], reps[j], seed))
                if progress is not None:
                    progress.advance(task)
        finally:
            if progress is not None:
                progress.stop()
    clashes = [
        [spec.field.to_plain(spec.field(values[i])), spec.field.to_plain(spec.field(values[j]))]
        for (i, j), same in zip(pairs, outcomes) if same
    ]
    certificate.add(
        "pairwise_non_isomorphic",
        not clashes,
        f"{len(pairs)} pairs compared under {spec.acting}" if not clashes else f"{len(clashes)} conjugate pairs",
        {"pairs": clashes} if clashes else None,
    )


def _certify_with_oracle(certificate, spec, values, members, budget, pool):
    target = "nilradical" if spec.target == "nilradical" else "cone"
    try:
        table = enumerate_orbits(spec.shape, spec.field.order, target, spec.acting, budget=budget, pool=pool)
    except BudgetExceeded as err:
        certificate.details["oracle"] = f"skipped: {err.message}"
        return
    orbits = [table.orbit_of(m) for m in members]
    certificate.details["oracle"] = {"orbit_count": table.orbit_count, "member_orbits": orbits}
    repeated = len(set(orbits)) != len(orbits)
    certificate.add(
        "oracle_orbits",
        not repeated,
        "members lie in distinct oracle orbits" if not repeated else "two members share an oracle orbit",
        {"orbits": orbits} if repeated else None,
    )


def _certify_pairs(certificate: Certificate, spec: FamilySpec, values: List, pairs: List):
    n, k = spec.params["n"], spec.params["k"]
    shape = spec.shape
    symbolic = symbolic_checks(n, k)
    certificate.details["symbolic"] = symbolic
    certificate.add("commutator_identity", symbolic["commutator_zero"], "[x_t, y_t] = 0 in Z[t]")
    certificate.add("U_stable", symbolic["y_preserves_U"], "y_t(<e_1..e_k>) in <e_1..e_k>")

    outside = [t for t, (x, y) in zip(values, pairs) if not (in_nilpotent_cone(shape, x) and in_nilpotent_cone(shape, y))]
    certificate.add(
        "membership",
        not outside,
        "x_t and y_t in N_p" if not outside else "members outside N_p",
        {"t": outside} if outside else None,
    )
    noncommuting = [t for t, (x, y) in zip(values, pairs) if not x.commutator(y).is_zero()]
    certificate.add(
        "commute",
        not noncommuting,
        "x_t y_t = y_t x_t at every sample" if not noncommuting else "non-commuting samples",
        {"t": noncommuting} if noncommuting else None,
    )
    acyclic = [t for t, (x, y) in zip(values, pairs) if not has_cyclic_vector_en(x, y)]
    certificate.add(
        "cyclic_vector",
        not acyclic,
        "e_n is cyclic for the pair" if not acyclic else "e_n not cyclic",
        {"t": acyclic} if acyclic else None,
    )
