import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from walkgauge.enumerate import enumerate_unicyclic, tree_classes  # noqa: E402

settings.register_profile("walkgauge", deadline=None)
settings.load_profile("walkgauge")

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def unicyclic_corpus():
    """Every unicyclic isomorphism class with 3 <= n <= 8 (143 graphs)."""
    return [g for n in range(3, 9) for g in enumerate_unicyclic(n)]


@pytest.fixture(scope="session")
def small_unicyclic():
    return [g for n in range(3, 7) for g in enumerate_unicyclic(n)]


@pytest.fixture(scope="session")
def tree_corpus():
    return [t for n in range(1, 9) for t in tree_classes(n)]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
