import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from emptyrect._util import WorkCounter
from emptyrect.geometry import Rect, best, contains_point, enumerate_maximal_empty, normalize_point_set
from emptyrect.stab import StabIndex, build_stab_index, stab_max_area


def linear_scan(rects, q):
    return best(r for r in rects if contains_point(r, q))


def random_rects(rng, count, side=200):
    out = []
    for _ in range(count):
        x_lo, x_hi = sorted(rng.sample(range(side + 1), 2))
        y_lo, y_hi = sorted(rng.sample(range(side + 1), 2))
        out.append(Rect(x_lo, x_hi, y_lo, y_hi))
    return out


def test_empty_index():
    idx = build_stab_index([])
    assert stab_max_area(idx, (1, 1)) is None


def test_single_rect_closed():
    r = Rect(2, 5, 3, 9)
    idx = build_stab_index([r])
    for q in [(2, 3), (5, 9), (3, 4), (2, 9)]:
        assert stab_max_area(idx, q) == r
    for q in [(1, 4), (6, 4), (3, 10), (3, 2)]:
        assert stab_max_area(idx, q) is None


def test_nested_rects_larger_wins():
    idx = build_stab_index([Rect(2, 8, 2, 8), Rect(0, 10, 0, 10)])
    assert stab_max_area(idx, (5, 5)).as_tuple() == (0, 0, 10, 10)


def test_two_point_instance_boundary_query():
    ps = normalize_point_set([(3, 4), (7, 5)], (0, 0, 12, 10))
    rects = enumerate_maximal_empty(ps)
    got = stab_max_area(build_stab_index(rects), (5, 4))
    assert (got.as_tuple(), got.area) == ((0, 0, 12, 4), 48)


def test_hundred_rects_hundred_queries():
    rng = random.Random(100)
    rects = random_rects(rng, 100)
    idx = build_stab_index(rects)
    for _ in range(100):
        q = (rng.randint(-5, 205), rng.randint(-5, 205))
        assert stab_max_area(idx, q) == linear_scan(rects, q)


@pytest.mark.parametrize("seed", range(10))
def test_equivalence_larger(seed):
    rng = random.Random(seed)
    rects = random_rects(rng, rng.randint(1, 512), side=rng.choice([20, 1000]))
    idx = StabIndex(rects)
    for _ in range(100):
        q = (rng.randint(-2, 1002), rng.randint(-2, 1002))
        got = idx.stab_max_area(q)
        want = linear_scan(rects, q)
        assert (got is None and want is None) or got.key == want.key


@settings(max_examples=200, deadline=None)
@given(
    st.lists(
        st.tuples(st.integers(0, 12), st.integers(1, 6), st.integers(0, 12), st.integers(1, 6)),
        max_size=25,
    ),
    st.integers(-1, 19),
    st.integers(-1, 19),
)
def test_equivalence_small_grid(raw, qx, qy):
    rects = [Rect(x, x + w, y, y + h) for x, w, y, h in raw]
    got = StabIndex(rects).stab_max_area((qx, qy))
    want = linear_scan(rects, (qx, qy))
    assert (got is None and want is None) or got.key == want.key


def test_size_witness_n_log_n():
    rng = random.Random(4)
    ratios = []
    for n in (64, 256, 1024):
        idx = StabIndex(random_rects(rng, n, side=10_000))
        ratios.append(idx.stored_cells / (n * math.log2(n)))
    assert max(ratios) <= 1.5 * ratios[0]


def test_work_is_polylog():
    rng = random.Random(5)
    rects = random_rects(rng, 2000, side=100_000)
    idx = StabIndex(rects)
    worst = 0
    for _ in range(200):
        w = WorkCounter()
        idx.stab_max_area((rng.randint(0, 100_000), rng.randint(0, 100_000)), w)
        worst = max(worst, w.units)
    assert worst <= 4 * (2000).bit_length() ** 2
