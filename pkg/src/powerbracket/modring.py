"""Exact arithmetic in Z_m with unit detection and signed powering."""

from __future__ import annotations

import math
from dataclasses import dataclass


class NotAUnit(ArithmeticError):
    """Inversion (or a negative power) was requested for a non-unit."""


class ModulusMismatch(ValueError):
    """Two elements from different rings were combined."""


MAX_MODULUS = 2**31 - 1


@dataclass(frozen=True)
class RingZm:
    """The ring Z_m of canonical residues 0..m-1, m >= 2."""

    modulus: int

    def __post_init__(self) -> None:
        if not 2 <= self.modulus <= MAX_MODULUS:
            raise ValueError(f"modulus must be in [2, {MAX_MODULUS}], got {self.modulus}")

    def elem(self, value: int) -> "RingElem":
        return RingElem(value % self.modulus, self)

    # Integer-level operations, used directly in hot loops.

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.modulus

    def neg(self, a: int) -> int:
        return (-a) % self.modulus

    def is_unit(self, a: int) -> bool:
        return math.gcd(a, self.modulus) == 1

    def inv(self, a: int) -> int:
        try:
            return pow(a, -1, self.modulus)
        except ValueError:
            raise NotAUnit(f"{a} is not a unit mod {self.modulus}") from None

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return pow(self.inv(a), -e, self.modulus)
        return pow(a, e, self.modulus)

    def unit_values(self) -> list[int]:
        return [a for a in range(self.modulus) if self.is_unit(a)]

    def units(self) -> list["RingElem"]:
        """All invertible residues, ascending."""
        return [RingElem(a, self) for a in self.unit_values()]


@dataclass(frozen=True)
class RingElem:
    """A canonical residue in its ring; total ops except inversion of non-units."""

    value: int
    ring: RingZm

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.ring.modulus:
            object.__setattr__(self, "value", self.value % self.ring.modulus)

    def _coerce(self, other: "RingElem") -> int:
        if not isinstance(other, RingElem):
            raise TypeError(f"cannot combine RingElem with {type(other).__name__}")
        if other.ring.modulus != self.ring.modulus:
            raise ModulusMismatch(
                f"modulus mismatch: {self.ring.modulus} vs {other.ring.modulus}"
            )
        return other.value

    def __add__(self, other: "RingElem") -> "RingElem":
        return RingElem(self.ring.add(self.value, self._coerce(other)), self.ring)

    def __sub__(self, other: "RingElem") -> "RingElem":
        return RingElem((self.value - self._coerce(other)) % self.ring.modulus, self.ring)

    def __mul__(self, other: "RingElem") -> "RingElem":
        return RingElem(self.ring.mul(self.value, self._coerce(other)), self.ring)

    def __neg__(self) -> "RingElem":
        return RingElem(self.ring.neg(self.value), self.ring)

    def inv(self) -> "RingElem":
        return RingElem(self.ring.inv(self.value), self.ring)

    def __pow__(self, e: int) -> "RingElem":
        return RingElem(self.ring.pow(self.value, e), self.ring)

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.value)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.ring.modulus})"


def units(ring: RingZm) -> list[RingElem]:
    """All residues coprime to the modulus, ascending."""
    return ring.units()
