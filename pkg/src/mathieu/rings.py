"""Exact base rings: the rationals, prime fields and the residue rings Z/nZ.

Raw values are Python ``Fraction`` objects over Q and canonical ints in
``[0, n)`` over the modular kinds.  :class:`Scalar` wraps a raw value together
with its ring for the public arithmetic surface; the linear algebra and the
algebra code work on raw values directly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Union

from .errors import BadParameter, RingMismatch

RawValue = Union[int, Fraction]


class RingKind(str, enum.Enum):
    RATIONALS = "Q"
    PRIME_FIELD = "Fp"
    MODULAR = "Zn"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class UnitStatus(str, enum.Enum):
    UNIT = "unit"
    ZERO_DIVISOR = "zero_divisor"
    ZERO = "zero"


@dataclass(frozen=True)
class RingSpec:
    kind: RingKind
    modulus: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", RingKind(self.kind))
        if self.kind is RingKind.RATIONALS:
            if self.modulus != 0:
                raise BadParameter("the rationals carry no modulus")
        elif self.kind is RingKind.PRIME_FIELD:
            if not _is_prime(self.modulus):
                raise BadParameter(f"{self.modulus} is not prime")
        elif self.modulus < 2:
            raise BadParameter(f"Z/nZ needs n >= 2, got {self.modulus}")

    @classmethod
    def rationals(cls) -> RingSpec:
        return cls(RingKind.RATIONALS)

    @classmethod
    def prime_field(cls, p: int) -> RingSpec:
        return cls(RingKind.PRIME_FIELD, p)

    @classmethod
    def modular(cls, n: int) -> RingSpec:
        return cls(RingKind.MODULAR, n)

    def __str__(self) -> str:
        if self.kind is RingKind.RATIONALS:
            return "Q"
        if self.kind is RingKind.PRIME_FIELD:
            return f"F_{self.modulus}"
        return f"Z/{self.modulus}Z"

    def is_field(self) -> bool:
        return self.kind is not RingKind.MODULAR

    def is_finite(self) -> bool:
        return self.kind is not RingKind.RATIONALS

    @property
    def size(self) -> int | None:
        return self.modulus if self.is_finite() else None

    # raw arithmetic -------------------------------------------------------

    def normalize(self, value) -> RawValue:
        """Coerce an int, Fraction, Scalar or decimal string into canonical form."""
        if isinstance(value, Scalar):
            if value.ring != self:
                raise RingMismatch(f"{value.ring} vs {self}")
            return value.value
        if isinstance(value, str):
            return self.parse(value)
        if self.kind is RingKind.RATIONALS:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return value.numerator % self.modulus
            return value.numerator * self.inverse(value.denominator % self.modulus) % self.modulus
        return int(value) % self.modulus

    @property
    def zero(self) -> RawValue:
        return Fraction(0) if self.kind is RingKind.RATIONALS else 0

    @property
    def one(self) -> RawValue:
        return Fraction(1) if self.kind is RingKind.RATIONALS else 1

    def add(self, x: RawValue, y: RawValue) -> RawValue:
        if self.modulus:
            return (x + y) % self.modulus
        return x + y

    def sub(self, x: RawValue, y: RawValue) -> RawValue:
        if self.modulus:
            return (x - y) % self.modulus
        return x - y

    def mul(self, x: RawValue, y: RawValue) -> RawValue:
        if self.modulus:
            return x * y % self.modulus
        return x * y

    def neg(self, x: RawValue) -> RawValue:
        if self.modulus:
            return -x % self.modulus
        return -x

    def is_unit(self, x: RawValue) -> bool:
        if self.modulus:
            return gcd(x, self.modulus) == 1
        return x != 0

    def inverse(self, x: RawValue) -> RawValue:
        if not self.is_unit(x):
            raise ZeroDivisionError(f"{x} is not a unit of {self}")
        if self.modulus:
            return pow(x, -1, self.modulus)
        return 1 / x

    def unit_status(self, x: RawValue) -> UnitStatus:
        if x == 0:
            return UnitStatus.ZERO
        if self.is_unit(x):
            return UnitStatus.UNIT
        return UnitStatus.ZERO_DIVISOR

    def elements(self) -> Iterator[int]:
        if not self.is_finite():
            raise BadParameter("cannot enumerate the rationals")
        return iter(range(self.modulus))

    # text form --------------------------------------------------------------

    def parse(self, text: str) -> RawValue:
        text = text.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                value = Fraction(int(num), int(den))
            else:
                value = Fraction(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise BadParameter(f"bad scalar {text!r}") from exc
        return self.normalize(value)

    def format(self, x: RawValue) -> str:
        return str(x)

    def to_json(self) -> dict:
        if self.kind is RingKind.RATIONALS:
            return {"kind": "Q"}
        key = "p" if self.kind is RingKind.PRIME_FIELD else "n"
        return {"kind": self.kind.value, key: self.modulus}

    @classmethod
    def from_json(cls, data: dict) -> RingSpec:
        kind = data.get("kind")
        if kind == "Q":
            return cls.rationals()
        if kind == "Fp":
            return cls.prime_field(int(data["p"]))
        if kind == "Zn":
            return cls.modular(int(data["n"]))
        raise BadParameter(f"unknown ring kind {kind!r}")


@dataclass(frozen=True)
class Scalar:
    ring: RingSpec
    value: RawValue

    def __post_init__(self):
        object.__setattr__(self, "value", self.ring.normalize(self.value))

    def _check(self, other) -> RawValue:
        if isinstance(other, Scalar):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other.value
        return self.ring.normalize(other)

    def __add__(self, other) -> Scalar:
        return Scalar(self.ring, self.ring.add(self.value, self._check(other)))

    def __sub__(self, other) -> Scalar:
        return Scalar(self.ring, self.ring.sub(self.value, self._check(other)))

    def __mul__(self, other) -> Scalar:
        return Scalar(self.ring, self.ring.mul(self.value, self._check(other)))

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self) -> Scalar:
        return Scalar(self.ring, self.ring.neg(self.value))

    def __str__(self) -> str:
        return self.ring.format(self.value)

    def is_zero(self) -> bool:
        return self.value == 0


@dataclass(frozen=True)
class Unit:
    inverse: Scalar


@dataclass(frozen=True)
class ZeroDivisor:
    pass


@dataclass(frozen=True)
class Zero:
    pass


def ring_arithmetic(x: Scalar, y: Scalar, op: str) -> Scalar:
    if x.ring != y.ring:
        raise RingMismatch(f"{x.ring} vs {y.ring}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise BadParameter(f"unknown operation {op!r}")


def scalar_unit_status(x: Scalar) -> Unit | ZeroDivisor | Zero:
    status = x.ring.unit_status(x.value)
    if status is UnitStatus.ZERO:
        return Zero()
    if status is UnitStatus.UNIT:
        return Unit(Scalar(x.ring, x.ring.inverse(x.value)))
    return ZeroDivisor()
