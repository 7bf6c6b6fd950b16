import pytest

from toric_vanishing.toric import validate_setup

# ray matrix and grading of each test variety
VARIETIES = {
    "P1": ([[1], [-1]], [[1, 1]]),
    "P2": ([[1, 0], [0, 1], [-1, -1]], [[1, 1, 1]]),
    "H2": ([[1, 0], [0, 1], [-1, 2], [0, -1]], [[1, 0, 1, 2], [0, 1, 0, 1]]),
}

H2_PHI, H2_BETA = VARIETIES["H2"]
Q_1234 = [[1, 2, 3, 4]]


def setup_for(name, q):
    phi, beta = VARIETIES[name]
    return validate_setup(phi, beta, q)


@pytest.fixture
def h2_11():
    return setup_for("H2", 11)


@pytest.fixture
def h2_2():
    return setup_for("H2", 2)


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
