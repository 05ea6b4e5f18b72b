from fractions import Fraction
from itertools import combinations

import pytest

ACCEPTANCE_LINES: list[str] = []


def gauss_binomial_by_subsets(n: int, k: int) -> list[int]:
    """Coefficients of C(n,k)_q by counting k-subsets of {0..n-1} by element sum."""
    if k > n:
        return []
    base = k * (k - 1) // 2
    counts = [0] * (k * (n - k) + 1)
    for sub in combinations(range(n), k):
        counts[sum(sub) - base] += 1
    return counts


@pytest.fixture
def subset_gauss():
    return gauss_binomial_by_subsets


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


F = Fraction
