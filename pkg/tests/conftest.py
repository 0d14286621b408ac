import sys
from itertools import combinations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from alphatau.core import Graph, Trigraph  # noqa: E402


def complete(n):
    return Graph(n, frozenset(combinations(range(n), 2)))


def cycle(n):
    return Graph(n, frozenset((min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)))


@pytest.fixture
def path3():
    """S-path 0-1-2 with no C edges."""
    return Trigraph(3, frozenset(), frozenset({(0, 1), (1, 2)}))


@pytest.fixture
def k4_matching():
    return Trigraph(4, frozenset({(0, 2), (0, 3), (1, 2), (1, 3)}), frozenset({(0, 1), (2, 3)}))


@pytest.fixture
def s_edge():
    return Trigraph(2, frozenset(), frozenset({(0, 1)}))


@pytest.fixture
def c5_all_s():
    return Trigraph(5, frozenset(), frozenset({(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}))


@pytest.fixture
def k3_plain():
    return Trigraph(3, frozenset({(0, 1), (0, 2), (1, 2)}), frozenset())


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
