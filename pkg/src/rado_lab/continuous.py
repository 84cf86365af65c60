"""Exact checks of the interval colorings for x_1 + c = a x_0.

Every comparison is between ``Fraction`` values; nothing here touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .coloring import Color
from .values import DomainError, ceil_div

Number = Union[int, Fraction, str]

DEFAULT_K_MAX = 64


def as_fraction(x: Number) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


@dataclass(frozen=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction
    closed_lo: bool = True
    closed_hi: bool = False

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise DomainError(f"interval endpoints out of order: {self.lo} > {self.hi}")

    @property
    def empty(self) -> bool:
        return self.lo == self.hi and not (self.closed_lo and self.closed_hi)

    def __contains__(self, x: Number) -> bool:
        x = as_fraction(x)
        above = x >= self.lo if self.closed_lo else x > self.lo
        below = x <= self.hi if self.closed_hi else x < self.hi
        return above and below

    def map_affine(self, scale: Fraction, shift: Fraction) -> "RationalInterval":
        """Image under x -> (x + shift) / scale for scale > 0."""
        return RationalInterval(
            (self.lo + shift) / scale, (self.hi + shift) / scale, self.closed_lo, self.closed_hi
        )

    def __str__(self) -> str:
        return f"{'[' if self.closed_lo else '('}{self.lo}, {self.hi}{']' if self.closed_hi else ')'}"


def _check_linear(c: Fraction, a: Fraction) -> None:
    if c <= 0:
        raise DomainError(f"c must be positive, got {c}")
    if a <= 1:
        raise DomainError(f"a must exceed 1, got {a}")
    # below this the limit c/(a-1) is under 1 and the colored range [1, c/(a-1)) is empty
    if c < a - 1:
        raise DomainError(f"c = {c} < a - 1 = {a - 1}: the range [1, c/(a-1)) is empty")


def interval_left(k: int, c: Number, a: Number) -> Fraction:
    """Left endpoint (c(a^k - 1) + a - 1) / (a^k (a - 1))."""
    c, a = as_fraction(c), as_fraction(a)
    ak = a**k
    return (c * (ak - 1) + a - 1) / (ak * (a - 1))


def lemma3_interval(k: int, c: Number, a: Number) -> RationalInterval:
    """k-th interval of the coloring of [1, c/(a-1)); k = 0 gives [1, (c+1)/a)."""
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    c, a = as_fraction(c), as_fraction(a)
    _check_linear(c, a)
    return RationalInterval(interval_left(k, c, a), interval_left(k + 1, c, a))


def interval_limit(c: Number, a: Number) -> Fraction:
    c, a = as_fraction(c), as_fraction(a)
    return c / (a - 1)


def map_x1_to_x0(x1: Number, c: Number, a: Number) -> Fraction:
    """x_0 = (x_1 + c) / a."""
    a = as_fraction(a)
    if a <= 0:
        raise DomainError(f"a must be positive, got {a}")
    return (as_fraction(x1) + as_fraction(c)) / a


def interval_color(x: Number, c: Number, a: Number) -> Color:
    """Color of x in [1, c/(a-1)): red when its interval index is even."""
    x, c, a = as_fraction(x), as_fraction(c), as_fraction(a)
    _check_linear(c, a)
    limit = interval_limit(c, a)
    if not 1 <= x < limit:
        raise DomainError(f"{x} is outside [1, {limit})")
    k = 0
    while x not in lemma3_interval(k, c, a):
        k += 1
    return Color.RED if k % 2 == 0 else Color.BLUE


@dataclass
class Violation:
    k: int
    check: str
    detail: str


@dataclass
class VerificationReport:
    name: str
    params: dict
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, k: int, check: str, detail: str) -> None:
        self.violations.append(Violation(k, check, detail))

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "ok": self.ok,
            "checked": self.checked,
            "violations": [vars(v) for v in self.violations],
        }


def verify_interval_chain(c: Number, a: Number, k_max: int = DEFAULT_K_MAX) -> VerificationReport:
    """Check that x -> (x + c)/a carries interval k onto interval k + 1 exactly.

    Also checks that consecutive intervals abut, that left endpoints follow
    c/(a-1) - (c - (a-1)) / (a^k (a-1)), and that every interval lies in
    [1, c/(a-1)).
    """
    c, a = as_fraction(c), as_fraction(a)
    _check_linear(c, a)
    if k_max < 1:
        raise DomainError(f"k_max must be >= 1, got {k_max}")
    limit = interval_limit(c, a)
    report = VerificationReport("interval_chain", {"c": str(c), "a": str(a), "k_max": k_max})
    intervals = [lemma3_interval(k, c, a) for k in range(k_max + 2)]
    for k in range(k_max + 1):
        cur, nxt = intervals[k], intervals[k + 1]
        image = cur.map_affine(a, c)
        if image.lo != nxt.lo:
            report.fail(k, "image-left", f"map({cur.lo}) = {image.lo} != {nxt.lo}")
        if image.hi != nxt.hi:
            report.fail(k, "image-right", f"map({cur.hi}) = {image.hi} != {nxt.hi}")
        if (image.closed_lo, image.closed_hi) != (nxt.closed_lo, nxt.closed_hi):
            report.fail(k, "image-closure", f"{image} vs {nxt}")
        if cur.hi != nxt.lo:
            report.fail(k, "abut", f"{cur.hi} != {nxt.lo}")
        closed_form = limit - (c - (a - 1)) / (a**k * (a - 1))
        if cur.lo != closed_form:
            report.fail(k, "left-endpoint", f"{cur.lo} != {closed_form}")
        if not cur.empty and not (cur.lo >= 1 and cur.hi <= limit):
            report.fail(k, "containment", f"{cur} not inside [1, {limit})")
        if k and c > a - 1 and not intervals[k - 1].lo < cur.lo < limit:
            report.fail(k, "monotone", f"left endpoints not strictly increasing below {limit}")
        report.checked += 1
    return report


def verify_lemma4_chain(c: Number, k_max: int = DEFAULT_K_MAX) -> VerificationReport:
    """Check that x -> x + c carries [kc+1, (k+1)c+1) onto the next block exactly."""
    c = as_fraction(c)
    if c <= 0:
        raise DomainError(f"c must be positive, got {c}")
    report = VerificationReport("lemma4_chain", {"c": str(c), "k_max": k_max})

    def block(k: int) -> RationalInterval:
        return RationalInterval(k * c + 1, (k + 1) * c + 1)

    for k in range(k_max + 1):
        cur, nxt = block(k), block(k + 1)
        image = cur.map_affine(Fraction(1), c)
        if (image.lo, image.hi) != (nxt.lo, nxt.hi):
            report.fail(k, "image", f"{cur} + {c} = {image} != {nxt}")
        if cur.hi != nxt.lo:
            report.fail(k, "abut", f"{cur.hi} != {nxt.lo}")
        report.checked += 1
    return report


def discrete_block_starts(c: int, a: int, count: int) -> list[int]:
    """Starts a^k t - ((a^k - 1)/(a - 1)) c of the integer blocks above c/(a-1), k < count."""
    t = ceil_div(c, a - 1)
    out = []
    ak = 1
    for _ in range(count):
        out.append(ak * t - (ak - 1) // (a - 1) * c)
        ak *= a
    return out


def verify_discrete_blocks(c: int, a: int, k_max: int = DEFAULT_K_MAX) -> VerificationReport:
    """Check the integer block displacement above c/(a-1).

    With blocks [s_k, s_{k+1} - 1], x_0 in block k-1 must put x_1 = a x_0 - c in
    block k. Endpoints are compared exactly; small blocks are also checked
    point by point.
    """
    for name, v in (("c", c), ("a", a)):
        if isinstance(v, bool) or not isinstance(v, int):
            raise DomainError(f"{name} must be an integer, got {v!r}")
    if a < 2 or c < 1:
        raise DomainError(f"need a >= 2 and c >= 1 (got c={c}, a={a})")
    if c % (a - 1) == 0:
        raise DomainError(f"(a-1) = {a - 1} divides c = {c}; the discrete Rado number is finite")
    report = VerificationReport("discrete_blocks", {"c": c, "a": a, "k_max": k_max})
    starts = discrete_block_starts(c, a, k_max + 2)
    t = starts[0]
    if not (t - 1) * (a - 1) < c < t * (a - 1):
        report.fail(0, "t", f"t = {t} is not the first integer above {c}/{a - 1}")
    # recurrence cross-check against the closed form
    for k in range(1, k_max + 2):
        if starts[k] != a * starts[k - 1] - c:
            report.fail(k, "recurrence", f"{starts[k]} != a * {starts[k - 1]} - c")
    for k in range(1, k_max + 1):
        lo0, hi0 = starts[k - 1], starts[k] - 1
        lo1, hi1 = starts[k], starts[k + 1] - 1
        if hi0 < lo0:
            report.fail(k, "empty", f"block {k - 1} is empty")
            continue
        img_lo, img_hi = a * lo0 - c, a * hi0 - c
        if img_lo != lo1:
            report.fail(k, "image-left", f"a * {lo0} - c = {img_lo} != {lo1}")
        if not lo1 <= img_hi <= hi1:
            report.fail(k, "image-right", f"a * {hi0} - c = {img_hi} outside [{lo1}, {hi1}]")
        if hi0 - lo0 < 4096:
            stray = [x0 for x0 in range(lo0, hi0 + 1) if not lo1 <= a * x0 - c <= hi1]
            if stray:
                report.fail(k, "pointwise", f"x0 = {stray[:5]} leave block {k}")
        report.checked += 1
    return report


def side_preserved(x1: Number, c: Number, a: Number) -> bool:
    """x_1 and x_0 = (x_1 + c)/a sit on the same side of c/(a-1) (or both on it)."""
    x1 = as_fraction(x1)
    limit = interval_limit(c, a)
    x0 = map_x1_to_x0(x1, c, a)
    return (x1 > limit) == (x0 > limit) and (x1 < limit) == (x0 < limit)
