import random

import pytest

from vspread import SpreadContext, minimalize

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def ex_ctx():
    return SpreadContext(6, (1, 0, 2))


@pytest.fixture
def ex_ideal(ex_ctx):
    return minimalize(["x1*x2", "x1*x3", "x1*x4", "x2*x3", "x2*x4^2", "x3*x4^2*x6"], ex_ctx)


@pytest.fixture
def rng():
    return random.Random(20261017)


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES
