import random
from fractions import Fraction

import pytest

from necklace_bv.quiver import a2, double, jordan, two_loop

QUIVERS = {"jordan": jordan, "a2": a2, "two-loop": two_loop}


@pytest.fixture(params=sorted(QUIVERS))
def quiver_name(request):
    return request.param


@pytest.fixture(params=[0, 1])
def p(request):
    return request.param


@pytest.fixture
def dq(quiver_name, p):
    return double(QUIVERS[quiver_name](), p)


@pytest.fixture
def rng():
    return random.Random(12345)


def F(x):
    return Fraction(x)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import VERDICTS
    except ImportError:
        return
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in VERDICTS:
            terminalreporter.write_line(line)
