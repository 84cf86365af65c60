"""Exhaustive search for valid (monochromatic-solution-free) colorings of [1, n].

Integers are decided in increasing order, red before blue, with 1 fixed red
(swapping colors is a symmetry of the constraint system). After every decision
each unassigned value is tested against both color classes; a value that would
complete a monochromatic solution in one class is forced into the other, and a
value blocked from both classes refutes the branch. This runs to fixpoint.

Parallel runs split the tree at a fixed decision depth and merge subtree
results in tree order, so outcomes never depend on worker timing.
"""

from __future__ import annotations

import logging
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .checker import ColorClassSums, find_mono_solution, sum_limit
from .coloring import Color, Coloring
from .formula import rado_value
from .values import DomainError, EquationParams, Finite, RadoValue, UnknownAbove

log = logging.getLogger(__name__)

RED, BLUE = 0, 1
_COLORS = (Color.RED, Color.BLUE)


@dataclass(frozen=True)
class SearchBudget:
    max_n: int = 200
    max_nodes: int = 10**9
    max_wall_seconds: float = math.inf
    threads: int = 1

    def __post_init__(self) -> None:
        if self.max_n < 1 or self.max_nodes < 1 or self.threads < 1 or not self.max_wall_seconds > 0:
            raise DomainError(f"budget entries must be positive: {self}")


@dataclass(frozen=True)
class ValidColoring:
    coloring: Coloring


@dataclass(frozen=True)
class NoValidColoring:
    nodes_explored: int


@dataclass(frozen=True)
class BudgetExhausted:
    nodes_explored: int
    max_depth: int
    reason: str


SearchOutcome = ValidColoring | NoValidColoring | BudgetExhausted


class _OutOfBudget(Exception):
    pass


class _State:
    """Colors of [1, n] plus sum tables for both classes."""

    __slots__ = ("n", "colors", "sums", "free")

    def __init__(self, n: int, params: EquationParams):
        self.n = n
        self.colors: list[int | None] = [None] * (n + 1)
        limit = sum_limit(n, params)
        self.sums = (ColorClassSums(params, limit), ColorClassSums(params, limit))
        self.free = n

    def copy(self) -> "_State":
        out = _State.__new__(_State)
        out.n = self.n
        out.colors = list(self.colors)
        out.sums = (self.sums[0].copy(), self.sums[1].copy())
        out.free = self.free
        return out

    def assign(self, v: int, col: int) -> None:
        self.colors[v] = col
        self.sums[col].add(v)
        self.free -= 1

    def allowed(self, v: int) -> tuple[bool, bool]:
        return (not self.sums[RED].would_complete(v), not self.sums[BLUE].would_complete(v))

    def propagate(self) -> bool:
        """Force colors to fixpoint; False when some value is blocked from both classes."""
        changed = True
        while changed:
            changed = False
            for v in range(1, self.n + 1):
                if self.colors[v] is not None:
                    continue
                red_ok, blue_ok = self.allowed(v)
                if red_ok and blue_ok:
                    continue
                if not red_ok and not blue_ok:
                    return False
                self.assign(v, RED if red_ok else BLUE)
                changed = True
        return True

    def first_free(self) -> int | None:
        if self.free == 0:
            return None
        for v in range(1, self.n + 1):
            if self.colors[v] is None:
                return v
        return None  # pragma: no cover

    def coloring(self) -> Coloring:
        return Coloring.from_colors(_COLORS[col] for col in self.colors[1:])


class _Counter:
    def __init__(self, max_nodes: int, deadline: float):
        self.nodes = 0
        self.max_nodes = max_nodes
        self.deadline = deadline
        self.max_depth = 0
        self.reason = ""

    def tick(self, depth: int) -> None:
        if self.nodes >= self.max_nodes:
            self.reason = "nodes"
            raise _OutOfBudget
        if self.nodes & 255 == 0 and time.monotonic() > self.deadline:
            self.reason = "time"
            raise _OutOfBudget
        self.nodes += 1
        if depth > self.max_depth:
            self.max_depth = depth
        if self.nodes % 100_000 == 0:
            log.debug("search progress: %d nodes, depth %d", self.nodes, depth)


def _dfs(state: _State, counter: _Counter, depth: int, frontier: list | None, split: int) -> _State | None:
    """Depth-first search below ``state`` (already propagated).

    With ``frontier`` given, states at decision depth ``split`` are appended to
    it instead of being explored; returns a complete state when one is found.
    """
    v = state.first_free()
    if v is None:
        if frontier is not None:
            frontier.append(state)
            return None
        return state
    if frontier is not None and depth >= split:
        frontier.append(state)
        return None
    red_ok, blue_ok = state.allowed(v)
    for col, ok in ((RED, red_ok), (BLUE, blue_ok)):
        if not ok:
            continue
        counter.tick(depth + 1)
        child = state.copy()
        child.assign(v, col)
        if not child.propagate():
            continue
        found = _dfs(child, counter, depth + 1, frontier, split)
        if found is not None:
            return found
    return None


def _root(n: int, params: EquationParams) -> _State | None:
    state = _State(n, params)
    if state.sums[RED].would_complete(1):
        return None
    state.assign(1, RED)
    return state if state.propagate() else None


def _finish(state: _State | None, counter: _Counter, params: EquationParams) -> SearchOutcome:
    if state is None:
        return NoValidColoring(counter.nodes)
    coloring = state.coloring()
    witness = find_mono_solution(coloring, params)
    if witness is not None:  # pragma: no cover - would mean a propagation bug
        raise AssertionError(f"search returned a coloring with solution {witness}")
    return ValidColoring(coloring)


def _search_subtree(state: _State, params: EquationParams, max_nodes: int, deadline: float) -> tuple:
    counter = _Counter(max_nodes, deadline)
    try:
        found = _dfs(state, counter, 0, None, 0)
    except _OutOfBudget:
        return ("budget", counter.nodes, counter.max_depth, counter.reason)
    if found is None:
        return ("none", counter.nodes, counter.max_depth, "")
    return ("found", counter.nodes, counter.max_depth, found.coloring().red_mask)


class Searcher:
    """Runs searches under one budget, holding a worker pool when threads > 1."""

    # frontier states per worker before the tree is split
    SPLIT_FACTOR = 4

    def __init__(self, params: EquationParams, budget: SearchBudget = SearchBudget()):
        self.params = params
        self.budget = budget
        self.started = time.monotonic()
        self.nodes_total = 0
        self._pool: ProcessPoolExecutor | None = None

    def __enter__(self) -> "Searcher":
        return self

    def __exit__(self, *exc) -> None:
        self.close()

    def close(self) -> None:
        if self._pool is not None:
            self._pool.shutdown(cancel_futures=True)
            self._pool = None

    @property
    def deadline(self) -> float:
        return self.started + self.budget.max_wall_seconds

    def find_valid_coloring(self, n: int) -> SearchOutcome:
        if n < 1:
            raise DomainError(f"n must be >= 1, got {n}")
        remaining = self.budget.max_nodes - self.nodes_total
        counter = _Counter(max(remaining, 0), self.deadline)
        root = _root(n, self.params)
        if root is None:
            return NoValidColoring(0)
        try:
            if self.budget.threads == 1:
                out = _finish(_dfs(root, counter, 0, None, 0), counter, self.params)
            else:
                out = self._parallel(root, counter)
        except _OutOfBudget:
            out = BudgetExhausted(counter.nodes, counter.max_depth, counter.reason)
        self.nodes_total += out.nodes_explored if not isinstance(out, ValidColoring) else counter.nodes
        return out

    def _parallel(self, root: _State, counter: _Counter) -> SearchOutcome:
        target = self.SPLIT_FACTOR * self.budget.threads
        frontier: list[_State] = []
        split = 1
        while True:
            # only the final frontier pass is charged, like the top of a sequential run
            frontier = []
            counter.nodes = 0
            _dfs(root, counter, 0, frontier, split)
            if len(frontier) >= target or split >= root.n:
                break
            split += 1
        if not frontier:
            return NoValidColoring(counter.nodes)
        if self._pool is None:
            self._pool = ProcessPoolExecutor(max_workers=self.budget.threads)
        futures = [
            self._pool.submit(_search_subtree, st, self.params, counter.max_nodes, counter.deadline)
            for st in frontier
        ]
        try:
            for st, fut in zip(frontier, futures):
                kind, nodes, depth, payload = fut.result()
                counter.nodes += nodes
                counter.max_depth = max(counter.max_depth, depth)
                if kind == "budget" or counter.nodes > counter.max_nodes:
                    counter.reason = payload or "nodes"
                    raise _OutOfBudget
                if kind == "found":
                    coloring = Coloring(st.n, payload)
                    if find_mono_solution(coloring, self.params) is not None:  # pragma: no cover
                        raise AssertionError("parallel search returned an invalid coloring")
                    return ValidColoring(coloring)
        finally:
            for fut in futures:
                fut.cancel()
        return NoValidColoring(counter.nodes)


def find_valid_coloring(n: int, params: EquationParams, budget: SearchBudget = SearchBudget()) -> SearchOutcome:
    with Searcher(params, budget) as searcher:
        return searcher.find_valid_coloring(n)


@dataclass
class BruteReport:
    """Result of an upward scan, with the lower-bound certificate and effort spent."""

    params: EquationParams
    value: RadoValue
    certificate: Coloring | None
    nodes: int
    seconds: float
    exhausted: str = ""
    per_n: list[tuple[int, str, int]] = field(default_factory=list)

    @property
    def budget_exhausted(self) -> bool:
        return bool(self.exhausted)


def brute_scan(params: EquationParams, budget: SearchBudget = SearchBudget()) -> BruteReport:
    """Scan n = 1, 2, ... until no valid coloring exists.

    Validity at n + 1 requires validity at n, so the first n without a valid
    coloring is the Rado number.
    """
    start = time.monotonic()
    certificate = Coloring(0)
    per_n: list[tuple[int, str, int]] = []
    with Searcher(params, budget) as searcher:
        for n in range(1, budget.max_n + 1):
            before = searcher.nodes_total
            out = searcher.find_valid_coloring(n)
            kind = type(out).__name__
            per_n.append((n, kind, searcher.nodes_total - before))
            log.debug("%s n=%d -> %s", params, n, kind)
            if isinstance(out, NoValidColoring):
                return BruteReport(params, Finite(n), certificate, searcher.nodes_total, time.monotonic() - start, "", per_n)
            if isinstance(out, BudgetExhausted):
                return BruteReport(
                    params, UnknownAbove(n - 1), certificate,
                    searcher.nodes_total, time.monotonic() - start, out.reason, per_n,
                )
            certificate = out.coloring
        return BruteReport(
            params, UnknownAbove(budget.max_n), certificate, searcher.nodes_total,
            time.monotonic() - start, "max_n", per_n,
        )


def rado_brute(params: EquationParams, budget: SearchBudget = SearchBudget()) -> RadoValue:
    return brute_scan(params, budget).value


def explore_negative_c(m: int, c: int, budget: SearchBudget = SearchBudget()) -> RadoValue:
    """Brute-force R(m, c, 2) for a negative constant c > -m."""
    if c >= 0:
        raise DomainError(f"explore_negative_c is for c < 0, got {c}")
    if c <= -m:
        raise DomainError(f"need c > -m (got m={m}, c={c})")
    return rado_brute(EquationParams(m, c, 2), budget)


def formula_or_none(params: EquationParams) -> RadoValue | None:
    """Closed-form value when one covers ``params`` (used for cross-reporting)."""
    try:
        return rado_value(params.m, params.c, params.a)
    except DomainError:
        return None


def default_threads() -> int:
    return max(1, min(4, os.cpu_count() or 1))
