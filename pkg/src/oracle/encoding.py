"""
Base-q Encoding of Target Sets

Elements of a target set (N_p^(x) or n_p over GF(q)) are matrices supported
on a fixed list of positions. Each element is packed into one int64: the
entry at the first position (row-major) is the most significant base-q
digit, so integer order is the lexicographic order on entries.
"""

from dataclasses import dataclass
from typing import Iterator, List, Tuple

import numpy as np

from config.oracle_params import CHUNK_SIZE, ORBIT_SEARCH_CAP
from src.algebra.field import FieldTag, gf
from src.algebra.matrix import ExactMatrix
from src.parabolic.shape import ParabolicShape
from src.validation.errors import BudgetExceeded

TARGETS = ("cone", "cone_x", "nilradical")


@dataclass(frozen=True)
class TargetCodec:
    """
    Positions and digit weights of one target set.

    Attributes:
        n: matrix size
        q: field order (prime)
        positions: allowed (row, col) pairs in row-major order
        nilpotency: power that must vanish, or None when every point qualifies
    """

    n: int
    q: int
    positions: Tuple[Tuple[int, int], ...]
    nilpotency: int = None

    @property
    def field(self) -> FieldTag:
        return gf(self.q)

    @property
    def ambient_size(self) -> int:
        return self.q ** len(self.positions)

    @property
    def weights(self) -> np.ndarray:
        d = len(self.positions)
        return np.array([self.q ** (d - 1 - k) for k in range(d)], dtype=np.int64)

    def decode(self, codes: np.ndarray) -> np.ndarray:
        """codes (N,) -> matrices (N, n, n)."""
        codes = np.asarray(codes, dtype=np.int64)
        digits = (codes[:, None] // self.weights[None, :]) % self.q
        mats = np.zeros((len(codes), self.n, self.n), dtype=np.int64)
        if self.positions:
            rows, cols = zip(*self.positions)
            mats[:, list(rows), list(cols)] = digits
        return mats

    def encode(self, mats: np.ndarray) -> np.ndarray:
        """matrices (N, n, n) -> codes (N,); entries off the positions are ignored."""
        if not self.positions:
            return np.zeros(len(mats), dtype=np.int64)
        rows, cols = zip(*self.positions)
        digits = mats[:, list(rows), list(cols)] % self.q
        return digits @ self.weights

    def to_matrix(self, code: int) -> ExactMatrix:
        values = self.decode(np.array([code]))[0]
        return ExactMatrix.from_rows(self.field, values.tolist())

    def from_matrix(self, m: ExactMatrix) -> int:
        field = self.field
        values = np.array([[field.to_int(x) for x in row] for row in m.entries], dtype=np.int64)
        return int(self.encode(values[None, :, :])[0])

    def member_mask(self, mats: np.ndarray) -> np.ndarray:
        """Which matrices satisfy the nilpotency requirement."""
        if self.nilpotency is None:
            return np.ones(len(mats), dtype=bool)
        power = mats.copy()
        for _ in range(self.nilpotency - 1):
            power = np.matmul(power, mats) % self.q
        return ~power.reshape(len(mats), -1).any(axis=1)

    def chunks(self) -> Iterator[np.ndarray]:
        for start in range(0, self.ambient_size, CHUNK_SIZE):
            yield np.arange(start, min(start + CHUNK_SIZE, self.ambient_size), dtype=np.int64)


def target_codec(shape: ParabolicShape, q: int, target: str, x: int = None, budget: int = None) -> TargetCodec:
    """
    Codec for a target set.

    Args:
        shape: parabolic data
        q: prime field order
        target: "cone" (N_p), "cone_x" (N_p^(x)) or "nilradical" (n_p)
        x: nilpotency bound for "cone_x"
        budget: maximum ambient size, defaults to ORBIT_SEARCH_CAP

    Raises:
        BudgetExceeded: if q^(number of positions) exceeds the budget
    """
    if target not in TARGETS:
        raise ValueError(f"Unknown target '{target}' (expected one of {TARGETS})")
    owner = shape.block_index
    n = shape.n
    if target == "nilradical":
        positions = tuple((i, j) for i in range(n) for j in range(n) if owner[i] < owner[j])
        nilpotency = None
    else:
        positions = tuple((i, j) for i in range(n) for j in range(n) if owner[i] <= owner[j])
        if target == "cone_x":
            if x is None or x < 1:
                raise ValueError("target cone_x needs a nilpotency bound x >= 1")
            nilpotency = min(x, n)
        else:
            nilpotency = n
    codec = TargetCodec(n, q, positions, nilpotency)
    cap = ORBIT_SEARCH_CAP if budget is None else budget
    if codec.ambient_size > cap:
        raise BudgetExceeded(
            f"q^{len(positions)} = {codec.ambient_size} points exceed the search cap {cap}",
            {"q": q, "positions": len(positions), "cap": cap},
        )
    return codec


def enumerate_members(codec: TargetCodec) -> np.ndarray:
    """Sorted codes of every point of the target set."""
    parts: List[np.ndarray] = []
    for codes in codec.chunks():
        mask = codec.member_mask(codec.decode(codes))
        parts.append(codes[mask])
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)
