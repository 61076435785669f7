"""
Finite-Field Orbit Enumeration

Orbits of P(F_q) or of its Levi factor acting by conjugation on N_p^(x) or
n_p. The group is generated by

- torus generators: diag(1, ..., z, ..., 1) with z a primitive element,
- transvections I + E_ij for every off-diagonal position of the group,

so closing the target set under these generators partitions it exactly
into orbits. Each generator acts as a permutation of the sorted member
codes; orbits are the connected components of the union of these
permutations (scipy csgraph). The representative of an orbit is its
lexicographically least matrix.
"""

from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import sympy
from rich.console import Console
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from config.oracle_params import CHUNK_SIZE, DEFAULT_PRIMES, PERMUTATION_TABLE_LIMIT
from src.algebra.matrix import ExactMatrix
from src.parabolic.shape import ParabolicShape
from src.oracle.encoding import TargetCodec, enumerate_members, target_codec
from src.validation.errors import FieldNotSupported

ACTING_GROUPS = ("P", "Levi")


# ----------------------------------------------------------------------
# Generators
# ----------------------------------------------------------------------
def group_generators(shape: ParabolicShape, q: int, acting: str) -> List[Tuple[np.ndarray, np.ndarray]]:
    """(g, g^-1) integer matrix pairs generating P(F_q) or L(F_q)."""
    if acting not in ACTING_GROUPS:
        raise ValueError(f"Unknown acting group '{acting}' (expected one of {ACTING_GROUPS})")
    n, owner = shape.n, shape.block_index
    generators = []
    if q > 2:
        z = int(sympy.primitive_root(q))
        z_inv = pow(z, -1, q)
        for i in range(n):
            g, g_inv = np.eye(n, dtype=np.int64), np.eye(n, dtype=np.int64)
            g[i, i], g_inv[i, i] = z, z_inv
            generators.append((g, g_inv))
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            allowed = owner[i] == owner[j] if acting == "Levi" else owner[i] <= owner[j]
            if not allowed:
                continue
            g, g_inv = np.eye(n, dtype=np.int64), np.eye(n, dtype=np.int64)
            g[i, j], g_inv[i, j] = 1, q - 1
            generators.append((g, g_inv))
    return generators


def generator_permutation(codec: TargetCodec, members: np.ndarray, generator: Tuple[np.ndarray, np.ndarray]) -> np.ndarray:
    """Index of g m g^-1 among the members, for every member m."""
    g, g_inv = generator
    images = np.empty(len(members), dtype=np.int64)
    for start in range(0, len(members), CHUNK_SIZE):
        mats = codec.decode(members[start:start + CHUNK_SIZE])
        conjugated = np.matmul(np.matmul(g, mats) % codec.q, g_inv) % codec.q
        codes = codec.encode(conjugated)
        index = np.searchsorted(members, codes)
        if np.any(index >= len(members)) or np.any(members[np.minimum(index, len(members) - 1)] != codes):
            raise RuntimeError("a generator moved a point out of the target set")
        images[start:start + CHUNK_SIZE] = index
    return images


def _components(size: int, sources: List[np.ndarray], targets: List[np.ndarray]) -> np.ndarray:
    rows = np.concatenate(sources)
    cols = np.concatenate(targets)
    graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(size, size))
    _, labels = connected_components(graph, directed=True, connection="weak")
    return labels


def _least_members(labels: np.ndarray) -> np.ndarray:
    """For every point, the least point index of its component."""
    count = int(labels.max()) + 1 if len(labels) else 0
    least = np.full(count, len(labels), dtype=np.int64)
    np.minimum.at(least, labels, np.arange(len(labels), dtype=np.int64))
    return least[labels]


# ----------------------------------------------------------------------
# Orbit tables
# ----------------------------------------------------------------------
@dataclass
class OrbitTable:
    """
    Orbits of a finite-field conjugation action.

    Attributes:
        shape: parabolic data
        q: field order
        target: "cone", "cone_x" or "nilradical"
        acting: "P" or "Levi"
        x: nilpotency bound used for the target
        orbit_count: number of orbits
        representatives: least matrix of every orbit, in increasing order
        orbit_sizes: orbit sizes aligned with representatives
        target_size: number of points in the target set
    """

    shape: ParabolicShape
    q: int
    target: str
    acting: str
    x: Optional[int]
    orbit_count: int
    representatives: List[ExactMatrix]
    orbit_sizes: List[int]
    target_size: int
    codec: TargetCodec = dataclass_field(repr=False)
    members: np.ndarray = dataclass_field(repr=False)
    roots: np.ndarray = dataclass_field(repr=False)

    @property
    def field(self):
        return self.codec.field

    def validate(self) -> List[str]:
        errors = []
        if sum(self.orbit_sizes) != self.target_size:
            errors.append("orbit sizes do not add up to the target size")
        if len(self.representatives) != self.orbit_count:
            errors.append("representative count differs from the orbit count")
        if len(set(self.roots.tolist())) != self.orbit_count:
            errors.append("number of orbit roots differs from the orbit count")
        return errors

    def orbit_of(self, m: ExactMatrix) -> int:
        """Position in ``representatives`` of the orbit containing m."""
        code = self.codec.from_matrix(m)
        index = int(np.searchsorted(self.members, code))
        if index >= len(self.members) or self.members[index] != code:
            raise ValueError("matrix is not a point of the target set")
        root = int(self.roots[index])
        return int(np.searchsorted(np.unique(self.roots), root))

    def representative_of(self, m: ExactMatrix) -> ExactMatrix:
        return self.representatives[self.orbit_of(m)]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "bv": list(self.shape.bv.blocks),
            "q": self.q,
            "target": self.target,
            "acting": self.acting,
            "x": self.x,
            "orbit_count": self.orbit_count,
            "target_size": self.target_size,
            "orbits": [
                {"representative": rep.to_plain(), "size": size}
                for rep, size in zip(self.representatives, self.orbit_sizes)
            ],
        }


def enumerate_orbits(
    shape: ParabolicShape,
    q: int,
    target: str = "cone",
    acting: str = "P",
    x: int = None,
    budget: int = None,
    pool=None,
    console: Optional[Console] = None,
) -> OrbitTable:
    """
    Enumerate the orbits of P(F_q) or L(F_q) on a target set.

    Args:
        shape: parabolic data
        q: prime field order
        target: "cone", "cone_x" (needs x) or "nilradical"
        acting: "P" or "Levi"
        x: nilpotency bound for "cone_x"
        budget: search cap on q^(number of free entries)
        pool: optional multiprocessing.Pool computing generator permutations in parallel
        console: when given, a progress bar is shown on it

    Raises:
        BudgetExceeded: if the target set is too large to enumerate
        FieldNotSupported: if q is not prime
    """
    if not sympy.isprime(q):
        raise FieldNotSupported(f"the orbit oracle needs a prime field order, got {q}")
    codec = target_codec(shape, q, target, x, budget)
    members = enumerate_members(codec)
    generators = group_generators(shape, q, acting)
    size = len(members)
    identity = np.arange(size, dtype=np.int64)

    if pool is not None:
        tasks = [(codec, members, g) for g in generators]
        permutations = iter(pool.starmap(generator_permutation, tasks))
    else:
        permutations = (generator_permutation(codec, members, g) for g in generators)

    progress = None
    if console is not None:
        progress = Progress(
            SpinnerColumn(),
            TextColumn("[bold cyan]{task.description}"),
            BarColumn(),
            TextColumn("[cyan]{task.completed}/{task.total}"),
            console=console,
            transient=True,
        )
        progress.start()
        task = progress.add_task(f"Merging orbits (q={q})", total=len(generators))
    try:
        if size <= PERMUTATION_TABLE_LIMIT:
            sources, targets = [identity], [identity]
            for perm in permutations:
                sources.append(identity)
                targets.append(perm)
                if progress is not None:
                    progress.advance(task)
            roots = _least_members(_components(size, sources, targets))
        else:
            roots = identity.copy()
            for perm in permutations:
                labels = _components(size, [identity, identity], [perm, roots])
                roots = _least_members(labels)
                if progress is not None:
                    progress.advance(task)
    finally:
        if progress is not None:
            progress.stop()

    root_ids, sizes = np.unique(roots, return_counts=True)
    representatives = [codec.to_matrix(int(members[r])) for r in root_ids]
    return OrbitTable(
        shape=shape,
        q=q,
        target=target,
        acting=acting,
        x=codec.nilpotency,
        orbit_count=len(root_ids),
        representatives=representatives,
        orbit_sizes=[int(s) for s in sizes],
        target_size=size,
        codec=codec,
        members=members,
        roots=roots,
    )


# ----------------------------------------------------------------------
# Growth in q
# ----------------------------------------------------------------------
FINITE_SIGNAL = "finite-signal"
INFINITE_SIGNAL = "infinite-signal"
MIXED_SIGNAL = "inconclusive"


@dataclass
class GrowthProfile:
    """
    Orbit counts over several primes.

    The signal is a heuristic: strict growth suggests infinitely many
    orbits over an infinite field, constancy suggests finitely many.
    """

    counts: List[Tuple[int, int]]
    signal: str
    flags: List[str] = dataclass_field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "counts": [{"q": q, "orbit_count": c} for q, c in self.counts],
            "signal": self.signal,
            "flags": list(self.flags),
        }


def growth_signal(counts: Sequence[int]) -> str:
    if len(counts) < 2:
        return MIXED_SIGNAL
    if all(a == b for a, b in zip(counts, counts[1:])):
        return FINITE_SIGNAL
    if all(a < b for a, b in zip(counts, counts[1:])):
        return INFINITE_SIGNAL
    return MIXED_SIGNAL


def growth_profile(
    shape: ParabolicShape,
    target: str = "cone",
    acting: str = "P",
    qs: Sequence[int] = DEFAULT_PRIMES,
    x: int = None,
    budget: int = None,
    console: Optional[Console] = None,
) -> GrowthProfile:
    """
    Orbit counts for each prime in qs with the growth signal.

    Raises:
        BudgetExceeded: if any q is over budget
    """
    counts = []
    for q in sorted(qs):
        table = enumerate_orbits(shape, q, target, acting, x=x, budget=budget, console=console)
        counts.append((q, table.orbit_count))
    values = [c for _, c in counts]
    profile = GrowthProfile(counts, growth_signal(values))
    if profile.signal == MIXED_SIGNAL and len(values) > 1:
        profile.flags.append("orbit counts neither constant nor strictly increasing")
    return profile
