import random

import pytest
from hypothesis import strategies as st

from emptyrect.geometry import normalize_point_set


def random_point_set(rng: random.Random, n: int, bounds=(0, 0, 4096, 4096)):
    """n points with distinct coordinates strictly inside bounds."""
    x_lo, y_lo, x_hi, y_hi = bounds
    xs = rng.sample(range(x_lo + 1, x_hi), n)
    ys = rng.sample(range(y_lo + 1, y_hi), n)
    return normalize_point_set(list(zip(xs, ys)), bounds)


def random_query(rng: random.Random, ps):
    b = ps.bounds
    return rng.randint(b.x_lo, b.x_hi), rng.randint(b.y_lo, b.y_hi)


@st.composite
def point_sets(draw, max_n=16, side=40):
    """Small point sets on a coarse grid, so ties and edge contacts are common."""
    n = draw(st.integers(0, min(max_n, side - 1)))
    xs = draw(st.lists(st.integers(1, side - 1), min_size=n, max_size=n, unique=True))
    ys = draw(st.lists(st.integers(1, side - 1), min_size=n, max_size=n, unique=True))
    return normalize_point_set(list(zip(xs, ys)), (0, 0, side, side))


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
