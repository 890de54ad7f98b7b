import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

from gbinterp import Polynomial, parse_polynomial

FIXTURES = Path(__file__).parent / "fixtures"


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="slow; pass --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[key])


def P(text, names="XY"):
    return parse_polynomial(text, list(names))


small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
nonzero_rationals = small_rationals.filter(lambda q: q != 0)


def exponents(n, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * n)


def polynomials(n, max_exp=3, max_terms=5):
    return st.dictionaries(exponents(n, max_exp), small_rationals, max_size=max_terms).map(
        lambda d: Polynomial(d, n))


def points(n):
    return st.tuples(*[small_rationals] * n)


@pytest.fixture
def fixtures_dir():
    return FIXTURES


__all__ = ["P", "Fraction", "FIXTURES"]
