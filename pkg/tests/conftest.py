import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from avoid312.paths import enumerate_dyck  # noqa: E402
from avoid312.perm import enumerate_avoiders  # noqa: E402


@lru_cache(maxsize=None)
def avoiders(n):
    return tuple(enumerate_avoiders(n))


@lru_cache(maxsize=None)
def dyck(n):
    return tuple(enumerate_dyck(n))


@pytest.fixture(scope="session")
def avoiders_of():
    return avoiders


@pytest.fixture(scope="session")
def dyck_of():
    return dyck


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
