import random

import pytest
from hypothesis import strategies as st

from dualsym.enumeration import enumerate_cs, enumerate_ip
from dualsym.partition import Partition, from_pairs

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def ip2():
    return enumerate_ip(2)


@pytest.fixture(scope="session")
def ip3():
    return enumerate_ip(3)


@pytest.fixture(scope="session")
def ip4():
    return enumerate_ip(4)


@pytest.fixture(scope="session")
def cs2():
    return enumerate_cs(2)


@pytest.fixture
def rng():
    return random.Random(20261016)


@st.composite
def ip_elements(draw, n=None, max_n=8):
    if n is None:
        n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, n))
    top = _labels(draw, n, k)
    bot = _labels(draw, n, k)
    pairs = [([x for x in range(1, n + 1) if top[x - 1] == i],
              [y for y in range(1, n + 1) if bot[y - 1] == i]) for i in range(k)]
    return from_pairs(n, pairs)


def _labels(draw, n, k):
    # a surjection 1..n -> 0..k-1: first k positions of a permutation hit each label
    order = draw(st.permutations(range(n)))
    lab = [0] * n
    for i, x in enumerate(order):
        lab[x] = i if i < k else draw(st.integers(0, k - 1))
    return lab


@st.composite
def cs_elements(draw, n=None, max_n=8):
    if n is None:
        n = draw(st.integers(1, max_n))
    lab = draw(st.lists(st.integers(0, 2 * n - 1), min_size=2 * n, max_size=2 * n))
    blocks = {}
    for s, c in enumerate(lab):
        blocks.setdefault(c, []).append(s)
    return Partition(n, blocks.values())


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
