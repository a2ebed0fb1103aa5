import random

import pytest
from hypothesis import strategies as st

coeff = st.integers(min_value=-50, max_value=50)


def int_polys(max_deg=8, nonzero=False):
    """Trimmed integer polynomials as coefficient tuples."""
    from cyclocert.intpoly import trim

    s = st.lists(coeff, min_size=1 if nonzero else 0, max_size=max_deg + 1).map(trim)
    return s.filter(bool) if nonzero else s


@pytest.fixture
def rng():
    return random.Random(1234)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
