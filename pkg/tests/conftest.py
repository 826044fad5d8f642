import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

rationals = st.builds(
    Fraction,
    st.integers(min_value=-12, max_value=12),
    st.integers(min_value=1, max_value=9),
)
nonzero_rationals = rationals.filter(lambda x: x != 0)


def random_rational(rng, lo=-9, hi=9, max_den=9, nonzero=False):
    while True:
        x = Fraction(rng.randint(lo, hi), rng.randint(1, max_den))
        if x or not nonzero:
            return x


def random_alpha(rng, n, ramified=True):
    """n rationals; the last is zero when ramified, otherwise all nonzero."""
    if ramified:
        return tuple(random_rational(rng) for _ in range(n - 1)) + (Fraction(0),)
    return tuple(random_rational(rng, nonzero=True) for _ in range(n))


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for line in results:
            terminalreporter.write_line(line)
