import pytest

from jumpcost import languages
from jumpcost.interplay import TABLE2_ROWS
from jumpcost.automata import parse_automaton

AB2_TEXT = languages.AB_STAR_TEXT
ASB_TEXT = languages.A_STAR_B_STAR_TEXT

# Filled in by test_acceptance; echoed after the run even when output is captured.
ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def ab2():
    return parse_automaton(AB2_TEXT)


@pytest.fixture(scope="session")
def asb():
    return parse_automaton(ASB_TEXT)


@pytest.fixture(scope="session")
def corpus():
    return languages.random_corpus(50, seed=0)


@pytest.fixture(scope="session")
def table2_automata():
    return [row.build() for row in TABLE2_ROWS]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
