import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from takahasi.words import Alphabet  # noqa: E402

# lines collected by the acceptance suite, echoed at the end of the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def ab():
    return Alphabet(("a", "b"), involutive=True)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
