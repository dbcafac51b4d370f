from collections import Counter
from functools import lru_cache
from itertools import permutations

import pytest

from matroidvol import graphic
from matroidvol.families import K4_EDGES


@lru_cache(maxsize=None)
def permutation_buckets(n):
    """Descent sequence (as a 0/1 string) -> number of permutations, by direct enumeration."""
    counts = Counter()
    for w in permutations(range(1, n + 1)):
        inner = "".join("1" if w[i] > w[i + 1] else "0" for i in range(n - 1))
        counts["1" + inner + "0"] += 1
    return counts


@pytest.fixture
def k4():
    return graphic(4, K4_EDGES)


@pytest.fixture
def triangles():
    # edge indices of the four triangles of K4 under K4_EDGES
    return [(0, 1, 3), (0, 2, 4), (1, 2, 5), (3, 4, 5)]


_ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" in report.nodeid and report.when == "call":
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = "PASS" if report.passed else "FAIL"
    elif "test_acceptance.py::test_criterion_" in report.nodeid and report.failed:
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=lambda s: int(s.split("_")[2])):
        terminalreporter.write_line(f"{_ACCEPTANCE[name]}  {name}")
