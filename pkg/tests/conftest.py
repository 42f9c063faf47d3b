import pytest

from hallmatch import make_family


@pytest.fixture
def pigeonhole():
    return make_family([(0, ["a"]), (1, ["a"])])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
