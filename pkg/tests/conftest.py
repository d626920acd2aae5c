import pytest
from mpmath import mp

from orbicasimir.numkernel import DEFAULT_DIGITS

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(autouse=True)
def _working_precision():
    with mp.workdps(DEFAULT_DIGITS):
        yield


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
