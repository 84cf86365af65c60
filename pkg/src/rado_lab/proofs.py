"""Replay of forcing chains: the upper-bound arguments as checkable data.

A chain starts from assumed colors. Each step names a solution tuple in which
every entry but one value already carries the same color, so that value must
take the other color. The chain ends in a tuple whose entries all share one
known color, which is the contradiction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Any, Mapping, Sequence

from .checker import is_solution
from .coloring import Color
from .formula import rado_main_formula
from .values import DomainError, EquationParams, Finite, ceil_div

ARITHMETIC = "arithmetic"
COLOR = "color"
RANGE = "range"


class MalformedChainError(ValueError):
    """The chain document is structurally broken (arity, value or color syntax)."""


@dataclass(frozen=True)
class Step:
    tuple: tuple[int, ...]  # (x_1, ..., x_m, x_0)
    value: int
    color: Color


@dataclass
class ForcingChain:
    params: EquationParams
    assumptions: dict[int, Color]
    steps: list[Step]
    contradiction: tuple[int, ...]
    expected: str = "pass"
    id: str = ""
    claimed_r: int | None = None
    note: str = ""

    def to_dict(self) -> dict:
        doc: dict[str, Any] = {
            "m": self.params.m,
            "c": self.params.c,
            "a": self.params.a,
            "assumptions": {str(v): col.value for v, col in sorted(self.assumptions.items())},
            "steps": [
                {"tuple": list(s.tuple), "forces": {"value": s.value, "color": s.color.value}}
                for s in self.steps
            ],
            "contradiction": list(self.contradiction),
            "expected": self.expected,
        }
        if self.id:
            doc["id"] = self.id
        if self.claimed_r is not None:
            doc["claimed_R"] = self.claimed_r
        if self.note:
            doc["note"] = self.note
        return doc


def _as_int(v: Any, what: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise MalformedChainError(f"{what} must be an integer, got {v!r}")
    return v


def _as_color(v: Any, what: str) -> Color:
    try:
        return Color.parse(v)
    except (ValueError, AttributeError) as exc:
        raise MalformedChainError(f"{what}: {exc}") from exc


def _as_tuple(raw: Any, m: int, what: str) -> tuple[int, ...]:
    if not isinstance(raw, Sequence) or isinstance(raw, str):
        raise MalformedChainError(f"{what} must be a list")
    tup = tuple(_as_int(x, what) for x in raw)
    if len(tup) != m + 1:
        raise MalformedChainError(f"{what} has {len(tup)} entries, expected m + 1 = {m + 1}")
    if any(x < 1 for x in tup):
        raise MalformedChainError(f"{what} has a non-positive entry")
    return tup


def parse_chain(doc: Mapping | str) -> ForcingChain:
    """Build a chain from its document form (mapping or JSON text)."""
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise MalformedChainError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, Mapping):
        raise MalformedChainError("chain document must be an object")
    try:
        params = EquationParams(
            _as_int(doc["m"], "m"), _as_int(doc["c"], "c"), _as_int(doc.get("a", 2), "a")
        )
        assumptions = {
            _as_int(int(k), "assumption key"): _as_color(v, f"assumption {k}")
            for k, v in dict(doc.get("assumptions", {})).items()
        }
        steps = []
        for i, raw in enumerate(doc.get("steps", [])):
            tup = _as_tuple(raw["tuple"], params.m, f"step {i + 1} tuple")
            forces = raw["forces"]
            steps.append(
                Step(tup, _as_int(forces["value"], f"step {i + 1} value"), _as_color(forces["color"], f"step {i + 1}"))
            )
        contradiction = _as_tuple(doc["contradiction"], params.m, "contradiction")
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, MalformedChainError):
            raise
        raise MalformedChainError(f"malformed chain: {exc}") from exc
    claimed = doc.get("claimed_R")
    return ForcingChain(
        params,
        assumptions,
        steps,
        contradiction,
        expected=str(doc.get("expected", "pass")),
        id=str(doc.get("id", "")),
        claimed_r=None if claimed is None else _as_int(claimed, "claimed_R"),
        note=str(doc.get("note", "")),
    )


@dataclass
class StepReport:
    index: int  # 1-based; 0 for the contradiction
    tuple: tuple[int, ...]
    arithmetic: bool
    color: bool
    range: bool
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.arithmetic and self.color and self.range

    def first_failure(self) -> str | None:
        for name in (ARITHMETIC, COLOR, RANGE):
            if not getattr(self, name):
                return name
        return None

    def to_dict(self) -> dict:
        return {
            "step": "contradiction" if self.index == 0 else self.index,
            "tuple": list(self.tuple),
            "arithmetic": self.arithmetic,
            "color": self.color,
            "range": self.range,
            "detail": self.detail,
        }


@dataclass
class ChainReport:
    chain_id: str
    bound: int | None
    steps: list[StepReport] = field(default_factory=list)
    contradiction: StepReport | None = None
    final_colors: dict[int, Color] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.steps) and self.contradiction is not None and self.contradiction.ok

    @property
    def failure(self) -> str | None:
        """Category of the first failed check, in chain order."""
        for s in [*self.steps, self.contradiction]:
            if s is not None and (reason := s.first_failure()):
                return reason
        return None

    @property
    def outcome(self) -> str:
        return "pass" if self.ok else f"fail:{self.failure}"

    def to_dict(self) -> dict:
        return {
            "id": self.chain_id,
            "outcome": self.outcome,
            "bound": self.bound,
            "steps": [s.to_dict() for s in self.steps],
            "contradiction": None if self.contradiction is None else self.contradiction.to_dict(),
        }


def default_bound(params: EquationParams) -> int | None:
    """The closed-form Rado number used for range checks, when one applies."""
    if params.a == 2 and params.m >= 2 and params.c >= 1:
        value = rado_main_formula(params.m, params.c)
        if isinstance(value, Finite):
            return int(value.value)
    return None


def verify_chain(chain: ForcingChain, bound: int | None | str = "formula") -> ChainReport:
    """Replay ``chain`` and report every check.

    ``bound`` is the Rado number entries must not exceed; by default the closed
    form, ``None`` to skip range checks, or an explicit integer (for example the
    brute-force value when adjudicating a disagreement).

    References to values whose color is not yet known are reported as color
    failures, not raised, so transcription slips stay diagnosable.
    """
    params = chain.params
    r = default_bound(params) if bound == "formula" else bound
    known = dict(chain.assumptions)
    report = ChainReport(chain.id, r)

    def in_range(tup: tuple[int, ...]) -> tuple[bool, str]:
        if r is None:
            return True, ""
        over = sorted({x for x in tup if x > r})
        return (not over, f"{over} exceed R = {r}" if over else "")

    for i, step in enumerate(chain.steps, start=1):
        tup = step.tuple
        if step.value not in tup:
            raise MalformedChainError(f"step {i}: forced value {step.value} is not in {tup}")
        arith = is_solution(tup[:-1], tup[-1], params)
        details = [] if arith else [f"sum {sum(tup[:-1])} + {params.c} != {params.a} * {tup[-1]}"]
        premise = step.color.other
        others = sorted({x for x in tup if x != step.value})
        unknown = [x for x in others if x not in known]
        wrong = [x for x in others if x in known and known[x] is not premise]
        clash = known.get(step.value) is premise
        color_ok = not unknown and not wrong and not clash
        if unknown:
            details.append(f"colors of {unknown} unknown")
        if wrong:
            details.append(f"{wrong} are not {premise.value}")
        if clash:
            details.append(f"{step.value} is already {premise.value}")
        rng, rdetail = in_range(tup)
        if rdetail:
            details.append(rdetail)
        report.steps.append(StepReport(i, tup, arith, color_ok, rng, "; ".join(details)))
        if not clash:
            known[step.value] = step.color

    tup = chain.contradiction
    arith = is_solution(tup[:-1], tup[-1], params)
    details = [] if arith else [f"sum {sum(tup[:-1])} + {params.c} != {params.a} * {tup[-1]}"]
    cols = {known.get(x) for x in tup}
    color_ok = None not in cols and len(cols) == 1
    if not color_ok:
        unknown = sorted({x for x in tup if x not in known})
        details.append(f"colors of {unknown} unknown" if unknown else "tuple is not monochromatic")
    rng, rdetail = in_range(tup)
    if rdetail:
        details.append(rdetail)
    report.contradiction = StepReport(0, tup, arith, color_ok, rng, "; ".join(details))
    report.final_colors = known
    return report


def _chain(params: EquationParams, assumptions: dict[int, Color], steps: list[Step], contradiction, **kw) -> ForcingChain:
    return ForcingChain(params, assumptions, steps, tuple(contradiction), **kw)


def generate_case_IIA_chain(m: int, c: int, s: int) -> ForcingChain:
    """Chain for m, c even when 1..s are red and s+1 is the first blue number.

    x = s(m-2)/2 + m + c - 1 is forced blue by (1, 2.., s.., x | x) and then
    completes the blue solution (s+1.., (m+c)/2, (m+c)/2 | x).
    """
    if m < 2 or c < 2 or m % 2 or c % 2:
        raise DomainError(f"needs m >= 2 and c >= 2 both even (got m={m}, c={c})")
    half = (m + c) // 2
    # 2 must be red whenever it appears in the first tuple
    lowest = 1 if m == 2 else 2
    if not lowest <= s <= half - 1:
        raise DomainError(f"s must lie in [{lowest}, {half - 1}] for m={m}, c={c}; got {s}")
    k = (m - 2) // 2
    x = s * k + m + c - 1
    params = EquationParams(m, c, 2)
    assumptions = {v: Color.RED for v in range(1, s + 1)}
    assumptions[s + 1] = Color.BLUE
    steps = [
        Step((1,) * m + (half,), half, Color.BLUE),
        Step((1,) + (2,) * k + (s,) * k + (x, x), x, Color.BLUE),
    ]
    contradiction = (s + 1,) * (m - 2) + (half, half, x)
    return _chain(params, assumptions, steps, contradiction, id=f"IIA(m={m},c={c},s={s})")


def generate_case_B1_chain(m: int, c: int) -> ForcingChain:
    """Chain for 1 and 3 red, 2 blue (Cases II.B.1, III.B.1, IV.B.1).

    For small odd m the forced value 2(m-1) + c can exceed the Rado number, so
    the chain is range-sound only from moderate m on (checked by verify_chain).
    """
    if m < 2 or c < 1 or (m % 2 == 0 and c % 2 == 1):
        raise DomainError(f"no finite Rado number to bound for m={m}, c={c}")
    params = EquationParams(m, c, 2)
    assumptions = {1: Color.RED, 2: Color.BLUE, 3: Color.RED}
    if m % 2 == 0:
        x = (2 * m + c) // 2
        first = (1,) * (m // 2) + (3,) * (m // 2) + (x,)
        if x == 3:  # m = c = 2: the tuple is already a red solution
            return _chain(params, assumptions, [], first, id=f"B1(m={m},c={c})")
        step = Step(first, x, Color.BLUE)
        contradiction = (2,) * m + (x,)
    else:
        x = 2 * (m - 1) + c
        h = (m - 1) // 2
        step = Step((1,) * h + (3,) * h + (x, x), x, Color.BLUE)
        contradiction = (2,) * (m - 1) + (x, x)
    return _chain(params, assumptions, [step], contradiction, id=f"B1(m={m},c={c})")


def generate_case_B2_chain(m: int, c: int) -> ForcingChain:
    """Chain for 1 red, 2 and 3 blue (Cases II.B.2, III.B.2, IV.B.2).

    Range-sound exactly when c + 3m - 3 does not exceed the Rado number, which
    fails for small m; those instances need the hand-made tables.
    """
    if m < 2 or c < 1 or (m % 2 == 0 and c % 2 == 1):
        raise DomainError(f"no finite Rado number to bound for m={m}, c={c}")
    params = EquationParams(m, c, 2)
    y, z = c + 2 * m - 2, c + 3 * m - 3
    assumptions = {1: Color.RED, 2: Color.BLUE, 3: Color.BLUE}
    steps = [
        Step((2,) * (m - 1) + (y, y), y, Color.RED),
        Step((3,) * (m - 1) + (z, z), z, Color.RED),
    ]
    contradiction = (1,) * (m - 1) + (z, y)
    return _chain(params, assumptions, steps, contradiction, id=f"B2(m={m},c={c})")


def generate_case_IIIA3_tuple(m: int, c: int, r: int) -> tuple[int, int]:
    """Counts (x, y) of floor and ceiling copies of (R-c)/(m-1) summing to R - c.

    x = c + ceil((R-c)/(m-1)) (m-1) - R and y = m - 1 - x.
    """
    if m < 3 or m % 2 == 0:
        raise DomainError(f"m must be odd and >= 3, got {m}")
    x = c + ceil_div(r - c, m - 1) * (m - 1) - r
    y = m - 1 - x
    if x < 0 or y < 0:
        raise DomainError(f"counts went negative (x={x}, y={y}) for m={m}, c={c}, R={r}")
    return x, y


@lru_cache(maxsize=1)
def _fixture_docs() -> tuple[dict, ...]:
    text = resources.files("rado_lab").joinpath("data/fixtures.json").read_text()
    return tuple(json.loads(text)["fixtures"])


def fixture_corpus() -> list[ForcingChain]:
    """Every transcribed table as a chain, with its expected outcome."""
    return [parse_chain(doc) for doc in _fixture_docs()]


def get_fixture(fixture_id: str) -> ForcingChain:
    for chain in fixture_corpus():
        if chain.id == fixture_id:
            return chain
    raise KeyError(f"no fixture named {fixture_id!r}")
