import numpy as np
import pytest

from pentagram import config
from pentagram.polygon import regular_polygon


@pytest.fixture(autouse=True)
def _default_tolerance():
    config.set_tol(config.DEFAULT_TOL)
    yield
    config.set_tol(config.DEFAULT_TOL)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def pentagon():
    return regular_polygon(5)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
