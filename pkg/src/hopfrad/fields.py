"""Exact scalar arithmetic over the rationals and prime fields.

Scalars are plain Python values: ``fractions.Fraction`` over the rationals,
``int`` residues in ``[0, p)`` over a prime field.  A :class:`FieldSpec`
carries the arithmetic so that the rest of the library can stay agnostic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, int]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """An exact base field: the rationals or F_p for a prime p."""

    kind: str  # "rationals" | "prime-field"
    p: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "rationals":
            if self.p is not None:
                raise ValueError("rationals take no modulus")
        elif self.kind == "prime-field":
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"modulus must be prime, got {self.p}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec("rationals")

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        return FieldSpec("prime-field", p)

    @property
    def is_rational(self) -> bool:
        return self.kind == "rationals"

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "prime-field"

    @property
    def characteristic(self) -> int:
        return 0 if self.is_rational else self.p  # type: ignore[return-value]

    # -- arithmetic --------------------------------------------------------

    def coerce(self, x) -> Scalar:
        """Canonicalize ``x`` into this field (lowest terms / residue in [0, p))."""
        if self.is_rational:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:  # type: ignore[operator]
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p  # type: ignore[operator]

    def zero(self) -> Scalar:
        return Fraction(0) if self.is_rational else 0

    def one(self) -> Scalar:
        return Fraction(1) if self.is_rational else 1

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return a + b if self.is_rational else (a + b) % self.p

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return a - b if self.is_rational else (a - b) % self.p

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b if self.is_rational else (a * b) % self.p

    def neg(self, a: Scalar) -> Scalar:
        return -a if self.is_rational else (-a) % self.p

    def inv(self, a: Scalar) -> Scalar:
        if self.is_rational:
            return Fraction(1) / a
        return pow(int(a), -1, self.p)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Scalar) -> bool:
        return a == 0

    def elements(self):
        """All field elements; prime fields only."""
        if self.is_rational:
            raise ValueError("cannot enumerate the rationals")
        return range(self.p)  # type: ignore[arg-type]


QQ = FieldSpec.rationals()


def GF(p: int) -> FieldSpec:
    return FieldSpec.prime(p)
