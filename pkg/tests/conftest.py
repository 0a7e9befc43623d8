import numpy as np
import pytest

from ewcodes import catalog

# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE = []



def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE:
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def ew6():
    return catalog.get("EW6").matrix


@pytest.fixture(scope="session")
def ew14():
    return catalog.get("EW14").matrix


@pytest.fixture(scope="session")
def c6():
    return catalog.get("C6").matrix


@pytest.fixture(scope="session")
def c14():
    return catalog.get("C14").matrix


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
