import pytest
from hypothesis import settings

from parbelos import from_cusps
from parbelos.suite import random_cusp_triples

settings.register_profile("repro", derandomize=True, deadline=None)
settings.load_profile("repro")

# Independent high-precision references (mpmath quadrature at 30 digits).
UPC = 2.29558714939263807403
COMMON_SLOPE_014 = 0.267949192431122706
COMMON_INTERCEPT_014 = 0.133974596215561353
TOUCH_LEFT_014 = 0.366025403784438647
TOUCH_RIGHT_014 = 2.098076211353315940


@pytest.fixture
def pb014():
    return from_cusps(0.0, 1.0, 4.0)


@pytest.fixture
def pb024():
    return from_cusps(0.0, 2.0, 4.0)


@pytest.fixture(scope="session")
def random_triples():
    return random_cusp_triples(1000, seed=0)


_criteria = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_criterion_" not in report.nodeid:
        return
    lines = [ln for ln in report.capstdout.splitlines() if ln.startswith("criterion")]
    verdict = "PASS" if report.passed else "FAIL"
    _criteria[report.nodeid] = lines[-1] if lines else f"{report.nodeid.split('::')[-1]}: {verdict}"


def pytest_terminal_summary(terminalreporter):
    if _criteria:
        terminalreporter.section("acceptance criteria")
        for key in sorted(_criteria):
            terminalreporter.write_line(_criteria[key])
