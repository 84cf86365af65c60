"""Monochromatic-solution detection for x_1 + ... + x_m + c = a * x_0.

Sums of j elements drawn (with repetition) from a color class are tracked as
layered reachability bit sets: bit ``s`` of ``layers[j]`` is set when ``s`` is
such a sum. Python integers serve as the bit vectors, so every layer update is a
handful of shifts and ors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .coloring import Color, Coloring, PartialColoring
from .values import EquationParams


@dataclass(frozen=True)
class Witness:
    """A monochromatic solution: sorted left-hand values ``xs``, right-hand ``x0``."""

    xs: tuple[int, ...]
    x0: int
    color: Color

    def as_tuple(self) -> tuple[int, ...]:
        return (*self.xs, self.x0)

    def to_dict(self) -> dict:
        return {"xs": list(self.xs), "x0": self.x0, "color": self.color.value}

    def __str__(self) -> str:
        return f"({', '.join(map(str, self.xs))} | {self.x0}) {self.color.value}"


def is_solution(xs: Sequence[int], x0: int, params: EquationParams) -> bool:
    if len(xs) != params.m:
        raise ValueError(f"expected {params.m} left-hand values, got {len(xs)}")
    return sum(xs) + params.c == params.a * x0


def sum_limit(n: int, params: EquationParams) -> int:
    """Largest left-hand sum that can matter on [1, n]: max(a*n - c, 0)."""
    return max(params.a * n - params.c, 0)


class ColorClassSums:
    """Incrementally maintained m-layer sum reachability for one color class.

    ``layers[j]`` has bit ``s`` set iff ``s`` is a sum of ``j`` class members;
    ``targets`` has bit ``a*x0 - c`` set for every member ``x0``. Bits above
    ``limit`` are dropped.
    """

    __slots__ = ("m", "a", "c", "limit", "mask", "layers", "targets", "members")

    def __init__(self, params: EquationParams, limit: int):
        self.m = params.m
        self.a = params.a
        self.c = params.c
        self.limit = limit
        self.mask = (1 << (limit + 1)) - 1
        self.layers = [1] + [0] * self.m
        self.targets = 0
        self.members: list[int] = []

    def copy(self) -> "ColorClassSums":
        out = ColorClassSums.__new__(ColorClassSums)
        out.m, out.a, out.c, out.limit, out.mask = self.m, self.a, self.c, self.limit, self.mask
        out.layers = list(self.layers)
        out.targets = self.targets
        out.members = list(self.members)
        return out

    def _target_bit(self, v: int) -> int:
        t = self.a * v - self.c
        return 1 << t if 0 <= t <= self.limit else 0

    def add(self, v: int) -> None:
        layers, mask = self.layers, self.mask
        # unbounded-knapsack update: j-sums using v at least once extend (j-1)-sums
        for j in range(1, self.m + 1):
            layers[j] = (layers[j] | (layers[j - 1] << v)) & mask
        self.targets |= self._target_bit(v)
        self.members.append(v)

    def has_solution(self) -> bool:
        return bool(self.layers[self.m] & self.targets)

    def would_complete(self, v: int) -> bool:
        """Whether adding ``v`` creates a solution, assuming the class has none yet."""
        layers, m = self.layers, self.m
        full = 0
        shift = 0
        for k in range(m + 1):
            full |= layers[m - k] << shift
            shift += v
        return bool(full & self.mask & (self.targets | self._target_bit(v)))


def _class_witness(values: Iterable[int], color: Color, n: int, params: EquationParams) -> Witness | None:
    """Canonical witness inside one class: least x0, then lexicographically least xs."""
    members = sorted(set(values))
    if not members:
        return None
    sums = ColorClassSums(params, sum_limit(n, params))
    for v in members:
        sums.add(v)
    hits = sums.layers[params.m] & sums.targets
    if not hits:
        return None
    layers = sums.layers
    for x0 in members:
        target = params.a * x0 - params.c
        if 0 <= target <= sums.limit and hits >> target & 1:
            break
    else:  # pragma: no cover - hits guarantees a member target
        raise AssertionError("reachability table inconsistent")
    xs = []
    rest = target
    for j in range(params.m, 0, -1):
        for v in members:
            if v <= rest and layers[j - 1] >> (rest - v) & 1:
                xs.append(v)
                rest -= v
                break
        else:  # pragma: no cover
            raise AssertionError("reconstruction failed")
    return Witness(tuple(xs), x0, color)


def _classes(coloring: Coloring | PartialColoring) -> tuple[int, dict[Color, list[int]]]:
    if isinstance(coloring, Coloring):
        return coloring.n, {Color.RED: coloring.red(), Color.BLUE: coloring.blue()}
    return coloring.n, {col: coloring.assigned(col) for col in Color}


def _min_witness(found: Iterable[Witness | None]) -> Witness | None:
    best = None
    for w in found:
        if w is not None and (best is None or (w.x0, w.xs) < (best.x0, best.xs)):
            best = w
    return best


def find_mono_solution(
    coloring: Coloring | PartialColoring, params: EquationParams
) -> Witness | None:
    """Return the canonical monochromatic solution, or None if the coloring avoids one.

    Partial colorings are checked on their assigned entries only. Ties between
    the two classes go to the smaller (x0, xs), so the answer does not depend on
    class iteration order.
    """
    n, classes = _classes(coloring)
    return _min_witness(_class_witness(vals, col, n, params) for col, vals in classes.items())


def find_mono_solution_incremental(
    partial: PartialColoring, params: EquationParams, last_assigned: int
) -> Witness | None:
    """Check only the class of ``last_assigned``.

    Valid when the coloring had no monochromatic solution before
    ``last_assigned`` was colored, since any new solution must then use it.
    """
    col = partial[last_assigned]
    if col is None:
        raise ValueError(f"{last_assigned} is not assigned")
    return _class_witness(partial.assigned(col), col, partial.n, params)
