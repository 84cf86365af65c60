import pytest

from oracles import naive_rado, naive_valid_exists
from rado_lab.checker import find_mono_solution
from rado_lab.formula import rado_main_formula
from rado_lab.search import (
    BudgetExhausted,
    NoValidColoring,
    SearchBudget,
    Searcher,
    ValidColoring,
    brute_scan,
    explore_negative_c,
    find_valid_coloring,
    rado_brute,
)
from rado_lab.values import DomainError, EquationParams, Finite, UnknownAbove

ORACLE_N = 10
GRID = [(m, c, a) for m in (1, 2, 3) for c in range(-1, 6) for a in (2, 3)]


@pytest.mark.parametrize("m,c,a", GRID)
def test_brute_matches_exhaustive_enumeration(m, c, a):
    expected = naive_rado(m, c, a, ORACLE_N)
    got = rado_brute(EquationParams(m, c, a), SearchBudget(max_n=ORACLE_N))
    if expected is None:
        assert got == UnknownAbove(ORACLE_N)
    else:
        assert got == Finite(expected)


@pytest.mark.parametrize("n", range(1, 9))
@pytest.mark.parametrize("m,c", [(2, 2), (3, 2), (4, 2), (3, -1), (4, -2)])
def test_single_n_matches_enumeration(n, m, c):
    params = EquationParams(m, c, 2)
    out = find_valid_coloring(n, params)
    assert isinstance(out, ValidColoring) == naive_valid_exists(n, m, c, 2)
    if isinstance(out, ValidColoring):
        assert out.coloring.n == n
        assert find_mono_solution(out.coloring, params) is None


def test_disputed_point_is_five():
    report = brute_scan(EquationParams(3, 1, 2))
    assert report.value == Finite(5)
    assert report.certificate.to_string() in ("RBBR", "BRRB")
    assert rado_main_formula(3, 1) == Finite(4)


@pytest.mark.parametrize("m,c", [(2, 2), (3, 2), (4, 2), (4, 4), (5, 1), (6, 2)])
def test_agrees_with_formula(m, c):
    assert rado_brute(EquationParams(m, c, 2)) == rado_main_formula(m, c)


def test_certificate_is_valid_lower_bound():
    params = EquationParams(4, 4, 2)
    report = brute_scan(params)
    assert report.value == Finite(10)
    assert report.certificate.n == 9
    assert find_mono_solution(report.certificate, params) is None
    assert [kind for _, kind, _ in report.per_n][-1] == "NoValidColoring"


def test_parity_case_runs_to_max_n():
    report = brute_scan(EquationParams(2, 1, 2), SearchBudget(max_n=40))
    assert report.value == UnknownAbove(40)
    assert report.exhausted == "max_n"


def test_node_budget():
    report = brute_scan(EquationParams(2, 3, 2), SearchBudget(max_n=200, max_nodes=5))
    assert isinstance(report.value, UnknownAbove)
    assert report.exhausted == "nodes"
    out = find_valid_coloring(60, EquationParams(2, 3, 2), SearchBudget(max_nodes=1))
    assert isinstance(out, BudgetExhausted) and out.reason == "nodes"


def test_time_budget():
    report = brute_scan(EquationParams(2, 3, 2), SearchBudget(max_n=10**6, max_wall_seconds=0.2))
    assert isinstance(report.value, UnknownAbove)
    assert report.exhausted == "time"


def test_budget_validation():
    with pytest.raises(DomainError):
        SearchBudget(max_n=0)
    with pytest.raises(DomainError):
        SearchBudget(threads=0)


def test_negative_c_conclusion_example():
    assert explore_negative_c(50, -46) == Finite(28)


def test_negative_c_domain():
    with pytest.raises(DomainError):
        explore_negative_c(5, 1)
    with pytest.raises(DomainError):
        explore_negative_c(5, -5)


def test_threads_are_deterministic():
    cases = [(3, 2, 2), (5, 3, 2), (6, 4, 2), (3, 1, 2), (7, 8, 2), (6, 7, 2), (2, 7, 4)]
    for m, c, a in cases:
        params = EquationParams(m, c, a)
        one = brute_scan(params, SearchBudget(max_n=60, threads=1))
        four = brute_scan(params, SearchBudget(max_n=60, threads=4))
        assert one.value == four.value
        assert one.certificate == four.certificate
        # refutations explore the same tree either way
        assert [r for r in one.per_n if r[1] == "NoValidColoring"] == [
            r for r in four.per_n if r[1] == "NoValidColoring"
        ]


def test_parallel_path_uses_pool():
    params = EquationParams(6, 7, 2)
    with Searcher(params, SearchBudget(threads=2)) as s2:
        out = s2.find_valid_coloring(40)
        assert s2._pool is not None
    assert isinstance(out, ValidColoring)
    assert out == find_valid_coloring(40, params)
