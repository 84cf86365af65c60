import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rado_lab.coloring import Color
from rado_lab.continuous import (
    RationalInterval,
    discrete_block_starts,
    interval_color,
    interval_left,
    interval_limit,
    lemma3_interval,
    map_x1_to_x0,
    side_preserved,
    verify_discrete_blocks,
    verify_interval_chain,
    verify_lemma4_chain,
)
from rado_lab.values import DomainError

F = Fraction


def test_intervals_example():
    assert (lemma3_interval(0, 3, 2).lo, lemma3_interval(0, 3, 2).hi) == (1, 2)
    assert (lemma3_interval(1, 3, 2).lo, lemma3_interval(1, 3, 2).hi) == (2, F(5, 2))
    assert str(lemma3_interval(0, 3, 2)) == "[1, 2)"


@pytest.mark.parametrize("c,a", [(3, 2), (5, 3), ("7/2", "3/2"), (1, 2), (10, 7), ("1/3", "5/4")])
def test_interval_chain_passes(c, a):
    try:
        report = verify_interval_chain(c, a, 64)
    except DomainError:
        assert F(c) < F(a) - 1
        return
    assert report.ok, report.to_dict()
    assert report.checked == 65


def test_degenerate_interval_chain():
    # c = a - 1: every interval is the empty [1, 1)
    iv = lemma3_interval(3, 1, 2)
    assert iv.empty and 1 not in iv


@pytest.mark.parametrize("c", [2, "5/3", 1, 3])
def test_lemma4_chain(c):
    assert verify_lemma4_chain(c, 64).ok


@pytest.mark.parametrize("c,a", [(5, 3), (1, 3), (7, 5), (2, 4), (3, 3), (10, 4), (1, 2 + 1)])
def test_discrete_blocks(c, a):
    report = verify_discrete_blocks(c, a, 40)
    assert report.ok, report.to_dict()


def test_discrete_blocks_example():
    starts = discrete_block_starts(5, 3, 4)
    assert starts == [3, 4, 7, 16]
    assert verify_discrete_blocks(1, 3, 8).ok and discrete_block_starts(1, 3, 1) == [1]


@pytest.mark.parametrize("c,a", [(4, 3), (3, 2), (6, 4)])
def test_discrete_blocks_divisible(c, a):
    with pytest.raises(DomainError):
        verify_discrete_blocks(c, a, 8)


@given(
    st.fractions(min_value=F(1, 10), max_value=20, max_denominator=50),
    st.fractions(min_value=F(11, 10), max_value=6, max_denominator=20),
    st.integers(0, 30),
)
def test_telescoping_and_closed_form(c, a, k):
    if c < a - 1:
        with pytest.raises(DomainError):
            lemma3_interval(k, c, a)
        return
    cur, nxt = lemma3_interval(k, c, a), lemma3_interval(k + 1, c, a)
    assert cur.hi == nxt.lo
    limit = interval_limit(c, a)
    assert cur.lo == limit - (c - (a - 1)) / (a**k * (a - 1))
    assert map_x1_to_x0(cur.lo, c, a) == nxt.lo
    if c > a - 1:
        assert cur.lo < nxt.lo < limit


def _samples(limit: Fraction, rng: random.Random, below: bool):
    for _ in range(1000):
        eps = F(rng.randint(1, 10**6), rng.randint(1, 10**6))
        yield limit - eps if below else limit + eps


@pytest.mark.parametrize("c,a", [(3, 2), (5, 3), ("7/2", "3/2"), (1, 2), (100, 9)])
def test_side_preservation(c, a):
    rng = random.Random(20240611)
    limit = interval_limit(c, a)
    for below in (True, False):
        for x1 in _samples(limit, rng, below):
            x0 = map_x1_to_x0(x1, c, a)
            assert (x0 < limit) if below else (x0 > limit)
            assert side_preserved(x1, c, a)
    assert side_preserved(limit, c, a)


def test_interval_color():
    assert interval_color(1, 3, 2) is Color.RED
    assert interval_color(2, 3, 2) is Color.BLUE
    assert interval_color("9/4", 3, 2) is Color.BLUE
    assert interval_color("5/2", 3, 2) is Color.RED
    with pytest.raises(DomainError):
        interval_color(3, 3, 2)


@given(st.fractions(min_value=1, max_value=F(299, 100), max_denominator=100))
def test_interval_color_is_solution_free(x1):
    # x1 and x0 = (x1 + 3)/2 always land in consecutive intervals
    x0 = map_x1_to_x0(x1, 3, 2)
    if x0 < 3:
        assert interval_color(x1, 3, 2) is not interval_color(x0, 3, 2)


def test_floats_rejected():
    with pytest.raises(TypeError):
        interval_left(1, 3.0, 2)


def test_interval_bounds():
    with pytest.raises(DomainError):
        RationalInterval(F(2), F(1))
    assert F(1) in RationalInterval(F(1), F(1), closed_hi=True)
