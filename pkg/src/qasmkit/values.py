"""Exact-where-possible numeric values for constant evaluation.

``Num`` models ``rational + pi_coeff * π`` exactly; anything outside that
form degrades to binary64.  Fixed-point angles (``angle[n]``) store an
unsigned n-bit payload interpreted as a fraction of a turn.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Num:
    """rational + pi_coeff*π when exact=True, else the binary64 in .real."""

    rational: Fraction = Fraction(0)
    pi_coeff: Fraction = Fraction(0)
    exact: bool = True
    real: float = 0.0

    @staticmethod
    def from_int(v: int) -> "Num":
        return Num(rational=Fraction(v))

    @staticmethod
    def from_fraction(v: Fraction) -> "Num":
        return Num(rational=Fraction(v))

    @staticmethod
    def from_float(v: float) -> "Num":
        return Num(exact=False, real=float(v))

    @staticmethod
    def pi() -> "Num":
        return Num(pi_coeff=Fraction(1))

    def to_float(self) -> float:
        if self.exact:
            return float(self.rational) + float(self.pi_coeff) * math.pi
        return self.real

    @property
    def is_integer(self) -> bool:
        return self.exact and self.pi_coeff == 0 and self.rational.denominator == 1

    @property
    def is_pi_multiple(self) -> bool:
        return self.exact and self.rational == 0

    def as_int(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return int(self.rational)

    def __add__(self, other: "Num") -> "Num":
        if self.exact and other.exact:
            return Num(self.rational + other.rational, self.pi_coeff + other.pi_coeff)
        return Num.from_float(self.to_float() + other.to_float())

    def __sub__(self, other: "Num") -> "Num":
        return self + (-other)

    def __neg__(self) -> "Num":
        if self.exact:
            return Num(-self.rational, -self.pi_coeff)
        return Num.from_float(-self.real)

    def __mul__(self, other: "Num") -> "Num":
        if self.exact and other.exact:
            # Exact only while the product stays linear in π.
            if self.pi_coeff == 0:
                return Num(self.rational * other.rational, self.rational * other.pi_coeff)
            if other.pi_coeff == 0:
                return Num(self.rational * other.rational, other.rational * self.pi_coeff)
        return Num.from_float(self.to_float() * other.to_float())

    def __truediv__(self, other: "Num") -> "Num":
        if other.exact and other.rational == 0 and other.pi_coeff == 0:
            raise ZeroDivisionError("division by zero")
        if not other.exact and other.real == 0.0:
            raise ZeroDivisionError("division by zero")
        if self.exact and other.exact and other.pi_coeff == 0:
            return Num(self.rational / other.rational, self.pi_coeff / other.rational)
        if (
            self.exact and other.exact
            and self.rational == 0 and other.rational == 0
        ):
            return Num(self.pi_coeff / other.pi_coeff)
        return Num.from_float(self.to_float() / other.to_float())

    def __pow__(self, other: "Num") -> "Num":
        if self.exact and other.is_integer and self.pi_coeff == 0:
            e = other.as_int()
            if e >= 0 or self.rational != 0:
                return Num(self.rational ** e)
        return Num.from_float(self.to_float() ** other.to_float())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Num):
            return NotImplemented
        if self.exact and other.exact:
            return self.rational == other.rational and self.pi_coeff == other.pi_coeff
        return self.to_float() == other.to_float()

    def __hash__(self) -> int:
        if self.exact:
            return hash((self.rational, self.pi_coeff))
        return hash(self.real)

    def __str__(self) -> str:
        if not self.exact:
            return repr(self.real)
        parts = []
        if self.rational != 0 or self.pi_coeff == 0:
            parts.append(str(self.rational))
        if self.pi_coeff != 0:
            c = self.pi_coeff
            if c == 1:
                parts.append("pi")
            elif c.denominator == 1:
                parts.append(f"{c.numerator}*pi")
            else:
                parts.append(f"{c.numerator}*pi/{c.denominator}")
        return " + ".join(parts)


def angle_encode(value: Num | float, width: int) -> int:
    """Encode radians onto the n-bit fraction-of-a-turn grid.

    payload = round(value / 2π * 2^n) mod 2^n, rounding half away from zero
    upward (round half-up).
    """
    if width < 1:
        raise ValueError("angle width must be >= 1")
    if isinstance(value, Num) and value.exact and value.rational == 0:
        # Exact grid arithmetic for rational multiples of π.
        scaled = value.pi_coeff * (2 ** (width - 1))
        return math.floor(scaled + Fraction(1, 2)) % (2 ** width)
    radians = value.to_float() if isinstance(value, Num) else float(value)
    scaled = radians / (2.0 * math.pi) * (2 ** width)
    return int(math.floor(scaled + 0.5)) % (2 ** width)


def angle_decode(payload: int, width: int) -> float:
    """Radians represented by an n-bit payload."""
    return 2.0 * math.pi * payload / (2 ** width)


def angle_add(a: int, b: int, width: int) -> int:
    return (a + b) % (2 ** width)


def angle_sub(a: int, b: int, width: int) -> int:
    return (a - b) % (2 ** width)


def angle_shr(a: int, amount: int, width: int) -> int:
    if amount < 0:
        raise ValueError("negative shift")
    return (a % (2 ** width)) >> amount


def angle_shl(a: int, amount: int, width: int) -> int:
    if amount < 0:
        raise ValueError("negative shift")
    return (a << amount) % (2 ** width)


def angle_set_bit(a: int, index: int, bit: int, width: int) -> int:
    if not 0 <= index < width:
        raise ValueError(f"bit index {index} out of range for angle[{width}]")
    if bit:
        return a | (1 << index)
    return a & ~(1 << index)


@dataclass(frozen=True)
class AngleFixed:
    """angle[width] value: payload/2^width turns."""

    payload: int
    width: int

    def __post_init__(self):
        if not 0 <= self.payload < 2 ** self.width:
            raise ValueError("angle payload out of range")

    def radians(self) -> float:
        return angle_decode(self.payload, self.width)


@dataclass(frozen=True)
class BitString:
    """bit[width] register value; bit k of payload is element [k] (little endian)."""

    payload: int
    width: int

    def __post_init__(self):
        if not 0 <= self.payload < 2 ** self.width:
            raise ValueError("bit payload out of range")

    def bit(self, k: int) -> int:
        return (self.payload >> k) & 1

    def as_int(self) -> int:
        return self.payload

    def __str__(self) -> str:
        return format(self.payload, f"0{self.width}b")


@dataclass(frozen=True)
class DurationValue:
    """Concrete duration as an exact rational count of dt ticks."""

    dt: Fraction

    def __add__(self, other: "DurationValue") -> "DurationValue":
        return DurationValue(self.dt + other.dt)

    def __sub__(self, other: "DurationValue") -> "DurationValue":
        return DurationValue(self.dt - other.dt)
