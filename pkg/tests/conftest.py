import cmath
import sys
import math

import pytest

LCG_SEED = 0x5EED
LCG_MUL = 6364136223846793005
LCG_INC = 1442695040888963407
MASK64 = (1 << 64) - 1


class Lcg:
    """64-bit linear congruential generator; uniform floats from the top 53 bits."""

    def __init__(self, seed=LCG_SEED):
        self.state = seed & MASK64

    def next_u64(self):
        self.state = (self.state * LCG_MUL + LCG_INC) & MASK64
        return self.state

    def uniform(self, lo=0.0, hi=1.0):
        return lo + (hi - lo) * ((self.next_u64() >> 11) / float(1 << 53))

    def disk_point(self, radius):
        r = radius * math.sqrt(self.uniform())
        return cmath.rect(r, 2 * math.pi * self.uniform())


@pytest.fixture
def lcg():
    return Lcg()


def u_recurrence(k, x):
    """U_k by the three-term recurrence; oracle for the angle form."""
    if k == -1:
        return 0.0
    prev, cur = 0.0, 1.0
    for _ in range(k):
        prev, cur = cur, 2 * x * cur - prev
    return cur


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
