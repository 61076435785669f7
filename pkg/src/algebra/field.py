"""
Field Tags

A FieldTag names the exact base field: the rationals or a prime field GF(q).
Scalars are the element objects of the matching sympy domain (``QQ`` or
``GF(q)``), so ``+ - * /`` and ``==`` against Python ints work natively.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterator, Union

import sympy
from sympy.polys.domains import GF, QQ

_GF_PATTERN = re.compile(r"^\s*GF\(\s*(\d+)\s*\)\s*$")


@lru_cache(maxsize=None)
def _domain(kind: str, characteristic: int):
    if kind == "rational":
        return QQ
    return GF(characteristic)


@dataclass(frozen=True)
class FieldTag:
    """
    Exact base field.

    Attributes:
        kind: "rational" or "prime"
        characteristic: 0 for the rationals, the prime q for GF(q)
    """

    kind: str
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == "rational":
            if self.characteristic != 0:
                raise ValueError("rational field has characteristic 0")
        elif self.kind == "prime":
            if not sympy.isprime(self.characteristic):
                raise ValueError(
                    f"GF({self.characteristic}): characteristic must be prime"
                )
        else:
            raise ValueError(f"Unknown field kind: {self.kind}")

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def rational(cls) -> "FieldTag":
        return cls("rational", 0)

    @classmethod
    def prime(cls, q: int) -> "FieldTag":
        return cls("prime", int(q))

    @classmethod
    def parse(cls, label: Union[str, "FieldTag"]) -> "FieldTag":
        """Parse "Q" or "GF(q)" (as used in matrix literals and on the CLI)."""
        if isinstance(label, FieldTag):
            return label
        text = str(label).strip()
        if text in ("Q", "QQ"):
            return cls.rational()
        match = _GF_PATTERN.match(text)
        if match:
            return cls.prime(int(match.group(1)))
        if text.isdigit():
            return cls.prime(int(text))
        raise ValueError(f"Cannot parse field label '{label}' (expected Q or GF(q))")

    # ------------------------------------------------------------------
    # Properties
    # ------------------------------------------------------------------
    @property
    def domain(self):
        return _domain(self.kind, self.characteristic)

    @property
    def is_finite(self) -> bool:
        return self.kind == "prime"

    @property
    def order(self) -> int:
        """Number of elements; only defined for prime fields."""
        if not self.is_finite:
            raise ValueError("The rationals have no finite order")
        return self.characteristic

    @property
    def label(self) -> str:
        return "Q" if self.kind == "rational" else f"GF({self.characteristic})"

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def __str__(self):
        return self.label

    # ------------------------------------------------------------------
    # Scalars
    # ------------------------------------------------------------------
    def __call__(self, value: Any):
        """Convert an int, Fraction, "a/b" string or domain element to a scalar."""
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, Fraction) or isinstance(value, sympy.Rational):
            num, den = int(value.numerator), int(value.denominator)
            if self.is_finite and den % self.characteristic == 0:
                raise ValueError(f"{value} has no image in {self.label}")
            return self.domain(num) / self.domain(den)
        if hasattr(value, "numerator") and hasattr(value, "denominator"):
            # QQ elements (PythonMPQ / gmpy mpq)
            return self(Fraction(int(value.numerator), int(value.denominator)))
        return self.domain(int(value))

    def to_int(self, a) -> int:
        """Canonical representative in [0, q) for a GF(q) scalar."""
        return int(a) % self.characteristic

    def to_fraction(self, a) -> Fraction:
        if self.is_finite:
            return Fraction(self.to_int(a))
        return Fraction(int(a.numerator), int(a.denominator))

    def to_plain(self, a) -> Union[int, str]:
        """JSON form: integers in [0, q) for GF(q), "a/b" strings for Q."""
        if self.is_finite:
            return self.to_int(a)
        frac = self.to_fraction(a)
        return int(frac.numerator) if frac.denominator == 1 else f"{frac}"

    def to_sympy(self, a):
        if self.is_finite:
            return sympy.Integer(self.to_int(a))
        frac = self.to_fraction(a)
        return sympy.Rational(frac.numerator, frac.denominator)

    def sort_key(self, a):
        """Total order on scalars used for canonical choices."""
        if self.is_finite:
            return self.to_int(a)
        return self.to_fraction(a)

    def elements(self) -> Iterator:
        """All elements of GF(q) in the order 0, 1, ..., q-1."""
        for value in range(self.order):
            yield self.domain(value)

    def units(self) -> Iterator:
        for value in range(1, self.order):
            yield self.domain(value)

    def primitive_element(self):
        """A generator of the multiplicative group of GF(q)."""
        return self.domain(int(sympy.primitive_root(self.order)))


QQ_FIELD = FieldTag.rational()


def gf(q: int) -> FieldTag:
    return FieldTag.prime(q)
