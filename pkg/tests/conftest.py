import os

import pytest

from zetamap.dynamics import bifurcation_scan
from zetamap.reference_data import load_zero_table

DATA = os.path.join(os.path.dirname(__file__), "data")
# first 20,000 zeros, mpmath.fp.zetazero (scripts/make_reference_table.py)
TABLE = os.path.join(DATA, "zeros_20000.txt")

# High-precision heights (mpmath.zetazero, 25 digits) for zeros outside the table.
ZERO_50000 = 40433.687385462161185
ZERO_100000 = 74920.827498994186794

_criteria = []


def record_criterion(number, passed, detail):
    _criteria.append((number, passed, detail))


@pytest.fixture(scope="session")
def zeros20k():
    return load_zero_table(TABLE)


@pytest.fixture(scope="session")
def zeros10k(zeros20k):
    return zeros20k.head(10000)


@pytest.fixture(scope="session")
def scan100():
    """n = 100 bifurcation scan over [0, 2.5], step 0.01."""
    return bifurcation_scan(100, 0.0, 2.5, 251)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, detail in sorted(_criteria, key=lambda c: c[0]):
        terminalreporter.write_line("criterion %s: %s  %s" % (number, "PASS" if passed else "FAIL", detail))
