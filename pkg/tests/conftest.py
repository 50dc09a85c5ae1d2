import random
import sys

import pytest
from hypothesis import strategies as st
from fractions import Fraction

from quatds.quaternion import Quaternion

small_fraction = st.builds(Fraction, st.integers(-12, 12), st.integers(1, 9))
exact_quaternion = st.builds(Quaternion, small_fraction, small_fraction, small_fraction, small_fraction)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for _, (_, line) in sorted(mod.RESULTS.items()):
        terminalreporter.write_line(line)
