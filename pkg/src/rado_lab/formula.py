"""Closed-form Rado numbers for x_1 + ... + x_m + c = a * x_0 and related published values.

Everything here is exact integer or rational arithmetic. Ceilings go through
``ceil_div`` so no value ever passes through a float.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .values import (
    DomainError,
    Finite,
    Infinite,
    Obstruction,
    RadoValue,
    ceil_div,
    check_int64,
)


def _require_int(**kwargs: object) -> None:
    for name, v in kwargs.items():
        if isinstance(v, bool) or not isinstance(v, int):
            raise DomainError(f"{name} must be an integer, got {v!r}")


def lemma1_lower_bound(m: int, c: int, a: int) -> int:
    """Lower bound ceil((m/a) * ceil((m+c)/a) + c/a) on the Rado number.

    It is attained by the two-block coloring built in
    :func:`rado_lab.coloring.lemma1_coloring`.
    """
    _require_int(m=m, c=c, a=a)
    if m < 2 or c < 1 or a < 1:
        raise DomainError(f"lower bound needs m >= 2, c >= 1, a >= 1 (got m={m}, c={c}, a={a})")
    first_blue = ceil_div(m + c, a)
    return check_int64(ceil_div(check_int64(m * first_blue + c), a))


def rado_main_formula(m: int, c: int) -> RadoValue:
    """R(m, c, 2) for m >= 2 and c >= 1.

    Infinite when m is even and c odd, otherwise ceil((m/2) ceil((m+c)/2) + c/2).
    c = 0 is served by :func:`registry_lookup` (Schaal-Vestal).
    """
    _require_int(m=m, c=c)
    if m < 2:
        raise DomainError(f"m must be >= 2, got {m}")
    if c < 1:
        raise DomainError(f"c must be >= 1, got {c} (use registry_lookup for c = 0)")
    if m % 2 == 0 and c % 2 == 1:
        return Infinite(Obstruction.PARITY)
    return Finite(lemma1_lower_bound(m, c, 2))


def rado_linear(c: int, a: int) -> RadoValue:
    """Discrete R(1, c, a) for x_1 + c = a * x_0."""
    _require_int(c=c, a=a)
    if c < 1 or a < 1:
        raise DomainError(f"need c >= 1 and a >= 1 (got c={c}, a={a})")
    if a == 1:
        return Infinite(Obstruction.COEFFICIENT_ONE)
    q, r = divmod(c, a - 1)
    if r:
        return Infinite(Obstruction.DIVISIBILITY)
    return Finite(check_int64(q))


def continuous_linear(c: Fraction | int, a: Fraction | int) -> RadoValue:
    """Continuous R(1, c, a): c/(a-1) for a > 1, infinite for a = 1."""
    c, a = Fraction(c), Fraction(a)
    if c <= 0 or a < 1:
        raise DomainError(f"need c > 0 and a >= 1 (got c={c}, a={a})")
    if a == 1:
        return Infinite(Obstruction.COEFFICIENT_ONE)
    return Finite(c / (a - 1))


class Registry(str, enum.Enum):
    """Published results used for cross-checks at the c = 0 boundary."""

    SCHUR = "schur"
    BEUTELSPACHER_BRESTOVANSKY = "beutelspacher-brestovansky"
    BURR_LOO = "burr-loo"
    SCHAAL = "schaal"
    SCHAAL_VESTAL = "schaal-vestal"
    VESTAL_CONTINUOUS = "vestal-continuous"


SCHUR_NUMBERS = {1: 2, 2: 5, 3: 14, 4: 45}


def registry_lookup(equation: Registry | str, **params: int) -> RadoValue:
    """Look up a published 2-color Rado number.

    Parameters per entry:

    * ``SCHUR``: ``t`` colors, 1 <= t <= 4.
    * ``BEUTELSPACHER_BRESTOVANSKY``: ``m`` total variables of
      x_1 + ... + x_{m-1} = x_m, m >= 3.
    * ``BURR_LOO``: ``c`` for x_1 + x_2 + c = x_3, any integer.
    * ``SCHAAL``: ``m`` total variables and ``c >= 0`` for
      x_1 + ... + x_{m-1} + c = x_m.
    * ``SCHAAL_VESTAL``: ``m`` left-hand variables of x_1 + ... + x_m = 2 x_0,
      i.e. this package's family at c = 0, a = 2.
    * ``VESTAL_CONTINUOUS``: ``m`` and ``a`` for the continuous number of
      x_1 + ... + x_m = a x_0, a >= 2, m >= a(a-1).
    """
    equation = Registry(equation)
    _require_int(**params)

    def need(*names: str) -> list[int]:
        missing = [n for n in names if n not in params]
        extra = sorted(set(params) - set(names))
        if missing or extra:
            raise DomainError(f"{equation.value} takes parameters {names}, got {sorted(params)}")
        return [params[n] for n in names]

    if equation is Registry.SCHUR:
        (t,) = need("t")
        if t not in SCHUR_NUMBERS:
            raise DomainError(f"Schur number S({t}) is not in the registry")
        return Finite(SCHUR_NUMBERS[t])

    if equation is Registry.BEUTELSPACHER_BRESTOVANSKY:
        (m,) = need("m")
        if m < 3:
            raise DomainError("Beutelspacher-Brestovansky needs m >= 3")
        return Finite(check_int64(m * m - m - 1))

    if equation is Registry.BURR_LOO:
        (c,) = need("c")
        if c >= 0:
            return Finite(check_int64(4 * c + 5))
        return Finite(check_int64(-c - ceil_div(-c - 5, 5)))

    if equation is Registry.SCHAAL:
        m, c = need("m", "c")
        if m < 3 or c < 0:
            raise DomainError("Schaal needs m >= 3 and c >= 0")
        if m % 2 == 0 and c % 2 == 1:
            return Infinite(Obstruction.PARITY)
        return Finite(check_int64(m * m - m - 1 + (m + 1) * c))

    if equation is Registry.SCHAAL_VESTAL:
        (m,) = need("m")
        if m < 1:
            raise DomainError("Schaal-Vestal needs m >= 1")
        # Published with m-1 left-hand terms; re-indexed to m left-hand terms here.
        exceptional = {4: Finite(5), 3: Finite(4), 2: Finite(1), 1: Infinite(Obstruction.DIVISIBILITY)}
        if m in exceptional:
            return exceptional[m]
        return Finite(check_int64(ceil_div(m * ceil_div(m, 2), 2)))

    if equation is Registry.VESTAL_CONTINUOUS:
        m, a = need("m", "a")
        if a < 2 or m < a * (a - 1):
            raise DomainError("Vestal's continuous result needs a >= 2 and m >= a(a-1)")
        return Finite(Fraction(m * m, a * a))

    raise DomainError(f"unknown registry entry {equation!r}")  # pragma: no cover


def rado_value(m: int, c: int, a: int = 2) -> RadoValue:
    """Dispatch to whichever closed form covers (m, c, a).

    Raises DomainError when no closed form applies (for example a != 2 with m >= 2,
    where only the lower bound is known).
    """
    if m == 1:
        return rado_linear(c, a)
    if a == 2 and c == 0:
        return registry_lookup(Registry.SCHAAL_VESTAL, m=m)
    if a == 2:
        return rado_main_formula(m, c)
    raise DomainError(f"no closed form for m={m}, a={a}; only the lower bound is known")
