import pytest

from gp2 import check, parse_program
from gp2.cli import corpus_text


@pytest.fixture(scope="session")
def corpus():
    """Checked corpus programs by name."""
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = check(parse_program(corpus_text(name)))
        return cache[name]

    return get


# acceptance lines collected by tests/test_acceptance.py, printed at the end
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
