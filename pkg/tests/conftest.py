import pytest

from padicpairs import Config, StandardModel

DENSE = [(5, 6, 11), (3, 4, 7), (7, 8, 29)]


@pytest.fixture(scope="session")
def model5():
    return StandardModel(Config(5, 6, 11))


@pytest.fixture(scope="session", params=DENSE, ids=lambda t: "p%d_%d_%d" % t)
def dense_model(request):
    return StandardModel(Config(*request.param))


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
