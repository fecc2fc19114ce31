import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from weakqfs.perm import Permutation  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@st.composite
def permutations_of(draw, n=None, max_n=9):
    if n is None:
        n = draw(st.integers(min_value=1, max_value=max_n))
    return Permutation(draw(st.permutations(range(n))))


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
