"""
Quiver Presets

The four bound quivers the package works with. Vertices, arrows and the
generators of the ideal are derived deterministically from
(kind, p, x, n_rows):

- ``Qp``: vertices 1..p, a loop beta_i at every vertex and an arrow
  alpha_i: i -> i+1; relations beta_i^x = 0 and
  beta_{i+1} alpha_i = alpha_i beta_i.
- ``QLp_prime``: vertices 1..p (one per Levi block) and, for every i < j,
  an arrow n_i_j from vertex j to vertex i carrying the block N_ij; no
  relations.
- ``QLp``: ``QLp_prime`` plus a loop beta_i at every vertex with
  beta_i^x = 0.
- ``covering_truncated``: vertices (row, col) with row 1 at the top,
  horizontal arrows alpha_k_l: (k,l) -> (k,l+1), vertical arrows
  beta_k_l: (k,l) -> (k+1,l), all commutativity squares and the vanishing
  of x consecutive vertical maps.

Paths are written in the order the arrows are applied, so the path
("alpha_1", "beta_2") stands for beta_2 . alpha_1.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, Hashable, List, Tuple

Vertex = Hashable
Path = Tuple[str, ...]

PRESET_KINDS = ("Qp", "QLp_prime", "QLp", "covering_truncated")


@dataclass(frozen=True)
class Relation:
    """
    A generator of the ideal: sum of coefficient * path = 0.

    Attributes:
        name: stable identifier (reported by RelationViolation)
        source: common source vertex of all paths
        target: common target vertex of all paths
        terms: (integer coefficient, path) pairs
    """

    name: str
    source: Vertex
    target: Vertex
    terms: Tuple[Tuple[int, Path], ...]


@dataclass(frozen=True)
class QuiverPreset:
    """
    A bound quiver identified by its kind and sizes.

    Attributes:
        kind: one of PRESET_KINDS
        p: number of columns (Qp, covering) or Levi blocks (QLp, QLp_prime)
        x: nilpotency bound for the loops or vertical maps
        n_rows: number of grid rows (covering_truncated only)
    """

    kind: str
    p: int
    x: int
    n_rows: int = 0

    def __post_init__(self):
        if self.kind not in PRESET_KINDS:
            raise ValueError(f"Unknown quiver kind '{self.kind}' (expected one of {PRESET_KINDS})")
        if self.p < 1:
            raise ValueError("a quiver preset needs p >= 1")
        if self.x < 1:
            raise ValueError("nilpotency bound x must be positive")
        if self.kind == "covering_truncated" and self.n_rows < 1:
            raise ValueError("a covering grid needs at least one row")
        if self.kind != "covering_truncated" and self.n_rows:
            raise ValueError("n_rows only applies to covering grids")

    @property
    def is_covering(self) -> bool:
        return self.kind == "covering_truncated"

    # ------------------------------------------------------------------
    # Generated structure
    # ------------------------------------------------------------------
    @cached_property
    def vertices(self) -> Tuple[Vertex, ...]:
        if self.is_covering:
            return tuple(
                (k, l) for k in range(1, self.n_rows + 1) for l in range(1, self.p + 1)
            )
        return tuple(range(1, self.p + 1))

    @cached_property
    def vertex_position(self) -> Dict[Vertex, int]:
        return {v: index for index, v in enumerate(self.vertices)}

    @cached_property
    def arrows(self) -> Dict[str, Tuple[Vertex, Vertex]]:
        """Arrow id -> (source, target), in a fixed order."""
        arrows: Dict[str, Tuple[Vertex, Vertex]] = {}
        if self.kind == "Qp":
            for i in range(1, self.p + 1):
                arrows[f"beta_{i}"] = (i, i)
            for i in range(1, self.p):
                arrows[f"alpha_{i}"] = (i, i + 1)
        elif self.kind in ("QLp_prime", "QLp"):
            if self.kind == "QLp":
                for i in range(1, self.p + 1):
                    arrows[f"beta_{i}"] = (i, i)
            for i in range(1, self.p + 1):
                for j in range(i + 1, self.p + 1):
                    arrows[f"n_{i}_{j}"] = (j, i)
        else:
            for k in range(1, self.n_rows + 1):
                for l in range(1, self.p):
                    arrows[f"alpha_{k}_{l}"] = ((k, l), (k, l + 1))
            for k in range(1, self.n_rows):
                for l in range(1, self.p + 1):
                    arrows[f"beta_{k}_{l}"] = ((k, l), (k + 1, l))
        return arrows

    @cached_property
    def relations(self) -> Tuple[Relation, ...]:
        relations: List[Relation] = []
        if self.kind in ("Qp", "QLp"):
            for i in range(1, self.p + 1):
                relations.append(Relation(f"nil_{i}", i, i, ((1, (f"beta_{i}",) * self.x),)))
        if self.kind == "Qp":
            for i in range(1, self.p):
                relations.append(
                    Relation(
                        f"comm_{i}",
                        i,
                        i + 1,
                        ((1, (f"alpha_{i}", f"beta_{i + 1}")), (-1, (f"beta_{i}", f"alpha_{i}"))),
                    )
                )
        if self.is_covering:
            for k in range(1, self.n_rows):
                for l in range(1, self.p):
                    relations.append(
                        Relation(
                            f"comm_{k}_{l}",
                            (k, l),
                            (k + 1, l + 1),
                            (
                                (1, (f"alpha_{k}_{l}", f"beta_{k}_{l + 1}")),
                                (-1, (f"beta_{k}_{l}", f"alpha_{k + 1}_{l}")),
                            ),
                        )
                    )
            for l in range(1, self.p + 1):
                for k in range(1, self.n_rows - self.x + 1):
                    path = tuple(f"beta_{r}_{l}" for r in range(k, k + self.x))
                    relations.append(Relation(f"nil_{k}_{l}", (k, l), (k + self.x, l), ((1, path),)))
        return tuple(relations)

    def horizontal_arrows(self) -> List[str]:
        return [a for a in self.arrows if a.startswith("alpha_")]

    def vertical_arrows(self) -> List[str]:
        if not self.is_covering:
            return []
        return [a for a in self.arrows if a.startswith("beta_")]

    def check_vertex(self, v: Vertex) -> Vertex:
        if v not in self.vertex_position:
            raise ValueError(f"vertex {v} is not a vertex of {self.label}")
        return v

    @property
    def label(self) -> str:
        if self.is_covering:
            return f"covering_truncated(p={self.p}, rows={self.n_rows}, x={self.x})"
        return f"{self.kind}(p={self.p}, x={self.x})"

    def to_dict(self) -> Dict[str, Any]:
        data = {"kind": self.kind, "p": self.p, "x": self.x}
        if self.is_covering:
            data["n_rows"] = self.n_rows
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "QuiverPreset":
        return cls(data["kind"], int(data["p"]), int(data["x"]), int(data.get("n_rows", 0)))


def qp_preset(p: int, x: int) -> QuiverPreset:
    return QuiverPreset("Qp", p, x)


def levi_preset(p: int, x: int = 1, with_loops: bool = False) -> QuiverPreset:
    """Levi quiver; ``x`` only matters when the loops are present."""
    return QuiverPreset("QLp" if with_loops else "QLp_prime", p, x)


def covering_preset(p: int, n_rows: int, x: int = None) -> QuiverPreset:
    """Truncated covering grid; x defaults to n_rows, where the nilpotency relations are vacuous."""
    return QuiverPreset("covering_truncated", p, n_rows if x is None else x, n_rows)
