"""2-colorings of [1, n] and the extremal colorings used as lower-bound certificates."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .formula import lemma1_lower_bound
from .values import DomainError, ceil_div


class Color(str, enum.Enum):
    RED = "red"
    BLUE = "blue"

    @property
    def other(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED

    @property
    def letter(self) -> str:
        return "R" if self is Color.RED else "B"

    @classmethod
    def parse(cls, text: str) -> "Color":
        key = text.strip().lower()
        if key in ("r", "red"):
            return cls.RED
        if key in ("b", "blue"):
            return cls.BLUE
        raise ValueError(f"unknown color {text!r}")


@dataclass(frozen=True)
class Coloring:
    """Total 2-coloring of [1, n].

    Stored as a bit mask: bit ``v`` of ``red_mask`` is set when ``v`` is red.
    ``n = 0`` is the empty coloring (a certificate for R = 1).
    """

    n: int
    red_mask: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError(f"coloring size must be >= 0, got {self.n}")
        if self.red_mask < 0 or self.red_mask >> (self.n + 1) or self.red_mask & 1:
            raise DomainError("red mask has bits outside [1, n]")

    @classmethod
    def from_colors(cls, colors: Iterable[Color]) -> "Coloring":
        """Build from the colors of 1, 2, ..., n in order."""
        mask = 0
        n = 0
        for n, col in enumerate(colors, start=1):
            if Color(col) is Color.RED:
                mask |= 1 << n
        return cls(n, mask)

    @classmethod
    def from_red(cls, n: int, red: Iterable[int]) -> "Coloring":
        mask = 0
        for v in red:
            if not 1 <= v <= n:
                raise DomainError(f"{v} is outside [1, {n}]")
            mask |= 1 << v
        return cls(n, mask)

    def color(self, v: int) -> Color:
        if not 1 <= v <= self.n:
            raise IndexError(f"{v} is outside [1, {self.n}]")
        return Color.RED if self.red_mask >> v & 1 else Color.BLUE

    def __getitem__(self, v: int) -> Color:
        return self.color(v)

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[Color]:
        return (self.color(v) for v in range(1, self.n + 1))

    def red(self) -> list[int]:
        return [v for v in range(1, self.n + 1) if self.red_mask >> v & 1]

    def blue(self) -> list[int]:
        return [v for v in range(1, self.n + 1) if not self.red_mask >> v & 1]

    def members(self, color: Color) -> list[int]:
        return self.red() if color is Color.RED else self.blue()

    def swapped(self) -> "Coloring":
        full = ((1 << (self.n + 1)) - 1) & ~1
        return Coloring(self.n, full & ~self.red_mask)

    def restrict(self, n: int) -> "Coloring":
        if not 0 <= n <= self.n:
            raise DomainError(f"cannot restrict a coloring of [1, {self.n}] to [1, {n}]")
        return Coloring(n, self.red_mask & ((1 << (n + 1)) - 1))

    def to_string(self) -> str:
        return "".join(col.letter for col in self)

    def to_dict(self) -> dict:
        return {"n": self.n, "red": self.red(), "blue": self.blue()}

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def __str__(self) -> str:
        return self.to_string()


def parse_coloring(doc: str | Mapping) -> Coloring:
    """Parse a coloring document.

    Accepts a mapping ``{"n", "red", "blue"}`` whose lists partition [1, n], its
    JSON text, or the compact ``"RBBR..."`` string form.
    """
    if isinstance(doc, str):
        text = doc.strip()
        if text.startswith("{"):
            try:
                doc = json.loads(text)
            except json.JSONDecodeError as exc:
                raise DomainError(f"malformed coloring JSON: {exc}") from exc
        else:
            text = text.strip('"')
            if any(ch not in "RBrb" for ch in text):
                raise DomainError("compact colorings use only the letters R and B")
            return Coloring.from_colors(Color.parse(ch) for ch in text)
    if not isinstance(doc, Mapping):
        raise DomainError("coloring document must be an object")
    try:
        n = doc["n"]
        red = list(doc["red"])
        blue = list(doc["blue"])
    except (KeyError, TypeError) as exc:
        raise DomainError(f"coloring document needs n, red and blue: {exc}") from exc
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    for v in red + blue:
        if isinstance(v, bool) or not isinstance(v, int):
            raise DomainError(f"entries must be integers, got {v!r}")
    if sorted(red + blue) != list(range(1, n + 1)):
        raise DomainError(f"red and blue must partition [1, {n}]")
    return Coloring.from_red(n, red)


class PartialColoring:
    """Mutable coloring of [1, n] where entries may be unassigned (``None``)."""

    def __init__(self, n: int, assignment: Mapping[int, Color] | None = None):
        if n < 0:
            raise DomainError(f"size must be >= 0, got {n}")
        self.n = n
        self._colors: list[Color | None] = [None] * (n + 1)
        for v, col in (assignment or {}).items():
            self[v] = col

    def __getitem__(self, v: int) -> Color | None:
        if not 1 <= v <= self.n:
            raise IndexError(f"{v} is outside [1, {self.n}]")
        return self._colors[v]

    def __setitem__(self, v: int, col: Color | str | None) -> None:
        if not 1 <= v <= self.n:
            raise IndexError(f"{v} is outside [1, {self.n}]")
        self._colors[v] = None if col is None else Color(col)

    def assigned(self, color: Color | None = None) -> list[int]:
        return [
            v
            for v in range(1, self.n + 1)
            if self._colors[v] is not None and (color is None or self._colors[v] is color)
        ]

    def unassigned(self) -> list[int]:
        return [v for v in range(1, self.n + 1) if self._colors[v] is None]

    def is_complete(self) -> bool:
        return all(col is not None for col in self._colors[1:])

    def complete(self) -> Coloring:
        if not self.is_complete():
            raise DomainError("partial coloring still has unassigned entries")
        return Coloring.from_colors(self._colors[1:])  # type: ignore[arg-type]

    def copy(self) -> "PartialColoring":
        out = PartialColoring(self.n)
        out._colors = list(self._colors)
        return out

    def __repr__(self) -> str:
        body = "".join("." if col is None else col.letter for col in self._colors[1:])
        return f"PartialColoring({body!r})"


def lemma1_coloring(m: int, c: int, a: int) -> Coloring:
    """Two-block coloring of [1, R-1], R = lemma1_lower_bound(m, c, a).

    [1, ceil((m+c)/a) - 1] is red and the rest blue. R = 1 yields the empty
    coloring.
    """
    bound = lemma1_lower_bound(m, c, a)
    n = bound - 1
    last_red = min(ceil_div(m + c, a) - 1, n)
    return Coloring.from_red(n, range(1, last_red + 1))


def parity_coloring(n: int) -> Coloring:
    """Evens red, odds blue."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return Coloring.from_red(n, range(2, n + 1, 2))


def coefficient_one_coloring(c: int, n: int) -> Coloring:
    """Blocks of length c starting at 1, alternating red and blue (for x_1 + c = x_0)."""
    if c < 1 or n < 1:
        raise DomainError(f"need c >= 1 and n >= 1 (got c={c}, n={n})")
    return Coloring.from_red(n, (v for v in range(1, n + 1) if ((v - 1) // c) % 2 == 0))


def _lemma3_index(v: int, c: int, a: int) -> int:
    """Index k of the interval [left(k), left(k+1)) containing v < c/(a-1).

    left(k) = (c(a^k - 1) + a - 1) / (a^k (a - 1)); walks k upward, no logarithms.
    """
    ak = 1
    k = 0
    # v < left(k+1)  <=>  v * a^(k+1) * (a-1) < c(a^(k+1) - 1) + a - 1
    while not v * ak * a * (a - 1) < c * (ak * a - 1) + a - 1:
        ak *= a
        k += 1
    return k


def linear_block_starts(c: int, a: int, upto: int) -> list[int]:
    """Left endpoints t, a t - c, a^2 t - a c - c, ... of the blocks above c/(a-1).

    The list ends with the first start exceeding ``upto``.
    """
    if a < 2:
        raise DomainError("blocks above c/(a-1) need a >= 2")
    t = ceil_div(c, a - 1)
    starts = [t]
    while starts[-1] <= upto:
        starts.append(a * starts[-1] - c)
    return starts


def linear_infinite_coloring(c: int, a: int, n: int) -> Coloring:
    """Solution-free coloring of [1, n] for x_1 + c = a x_0 when (a-1) does not divide c.

    Integers below c/(a-1) follow the geometric interval coloring converging
    to c/(a-1); integers above it follow the blocks starting at
    t = ceil(c/(a-1)). Red on even block index, blue on odd.
    """
    if a < 2 or c < 1 or n < 1:
        raise DomainError(f"need a >= 2, c >= 1, n >= 1 (got c={c}, a={a}, n={n})")
    if c % (a - 1) == 0:
        raise DomainError(f"(a-1) = {a - 1} divides c = {c}; R(1, c, a) is finite")
    below = c // (a - 1)
    red = [v for v in range(1, min(below, n) + 1) if _lemma3_index(v, c, a) % 2 == 0]
    starts = linear_block_starts(c, a, n)
    for k in range(len(starts) - 1):
        if k % 2 == 0:
            red.extend(range(starts[k], min(starts[k + 1] - 1, n) + 1))
    return Coloring.from_red(n, red)

