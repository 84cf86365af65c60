"""Shared value types: equation parameters, Rado values, errors, exact integer helpers."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

INT64_MAX = 2**63 - 1


class DomainError(ValueError):
    """Raised when parameters fall outside an operation's hypotheses."""


class RadoOverflowError(OverflowError):
    """Raised when a closed-form value leaves the signed 64-bit range."""


def ceil_div(p: int, q: int) -> int:
    """Exact ceiling of p/q for integers, any sign of p, q > 0."""
    if q <= 0:
        raise ValueError("ceil_div needs a positive divisor")
    return -((-p) // q)


def check_int64(value: int) -> int:
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise RadoOverflowError(f"value {value} exceeds the 64-bit range")
    return value


@dataclass(frozen=True)
class EquationParams:
    """The equation x_1 + ... + x_m + c = a * x_0."""

    m: int
    c: int
    a: int = 2

    def __post_init__(self) -> None:
        for name in ("m", "c", "a"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise DomainError(f"{name} must be an integer, got {v!r}")
        if self.m < 1:
            raise DomainError(f"m must be >= 1, got {self.m}")
        if self.a < 1:
            raise DomainError(f"a must be >= 1, got {self.a}")

    def __str__(self) -> str:
        return f"R({self.m},{self.c},{self.a})"

    def as_dict(self) -> dict:
        return {"m": self.m, "c": self.c, "a": self.a}


class Obstruction(str, enum.Enum):
    PARITY = "parity"
    DIVISIBILITY = "divisibility"
    COEFFICIENT_ONE = "coefficient-one"


@dataclass(frozen=True)
class Finite:
    # Fraction only for continuous Rado numbers.
    value: Union[int, Fraction]

    def __post_init__(self) -> None:
        if self.value <= 0:
            raise DomainError(f"finite Rado value must be positive, got {self.value}")

    def __str__(self) -> str:
        return str(self.value)

    def as_dict(self) -> dict:
        return {"kind": "finite", "value": _jsonable(self.value)}


@dataclass(frozen=True)
class Infinite:
    reason: Obstruction

    def __str__(self) -> str:
        return f"infinite ({self.reason.value})"

    def as_dict(self) -> dict:
        return {"kind": "infinite", "reason": self.reason.value}


@dataclass(frozen=True)
class UnknownAbove:
    """A valid coloring is known up to ``bound``; nothing is known beyond."""

    bound: int

    def __str__(self) -> str:
        return f"unknown above {self.bound}"

    def as_dict(self) -> dict:
        return {"kind": "unknown_above", "bound": self.bound}


RadoValue = Union[Finite, Infinite, UnknownAbove]


def _jsonable(v: Union[int, Fraction]) -> Union[int, str]:
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return v
