import sys

import pytest

from goodcompact.laurent import parse


def sys_of(*texts, n):
    return [parse(t, n) for t in texts]


@pytest.fixture
def P():
    return lambda text, n=None: parse(text, n)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])
