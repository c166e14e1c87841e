import random

import pytest
from hypothesis import strategies as st

from fano_k0.chow import CycleClass
from fano_k0.registry import all_descriptors

DESCRIPTORS = list(all_descriptors())
INDEX1 = [f for f in DESCRIPTORS if f.index == 1]
INDEX2 = [f for f in DESCRIPTORS if f.index == 2]

descriptors = st.sampled_from(DESCRIPTORS)
rationals = st.fractions(min_value=-30, max_value=30, max_denominator=12)


@st.composite
def cycle_classes(draw, parent=None):
    f = parent if parent is not None else draw(descriptors)
    return CycleClass(draw(rationals), draw(rationals), draw(rationals), draw(rationals), f)


@pytest.fixture
def rng():
    return random.Random(20240517)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
