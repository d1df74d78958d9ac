import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from emptyrect.geometry import (
    DomainError,
    GeometryError,
    OracleSizeError,
    Rect,
    ValidationError,
    area,
    contains_point,
    enumerate_maximal_empty,
    interior_empty,
    is_maximal_empty,
    normalize_point_set,
    oracle_largest_containing,
)
from emptyrect.generate import generate

from conftest import point_sets, random_point_set

TWO = [(3, 4), (7, 5)]
B12 = (0, 0, 12, 10)


def R(x_lo, x_hi, y_lo, y_hi):
    return Rect(x_lo, x_hi, y_lo, y_hi)


@pytest.mark.parametrize(
    "rect, expected",
    [(R(0, 10, 0, 10), 100), (R(3, 12, 0, 5), 45), (R(-4, 3, -3, 5), 56)],
)
def test_area(rect, expected):
    assert area(rect) == expected


def test_degenerate_rect_rejected():
    with pytest.raises(GeometryError):
        R(1, 1, 0, 5)
    with pytest.raises(GeometryError):
        R(0, 5, 3, 2)


@pytest.mark.parametrize(
    "rect, q, expected",
    [(R(0, 4, 0, 10), (4, 5), True), (R(0, 4, 0, 10), (5, 5), False), (R(3, 7, 0, 10), (5, 4), True)],
)
def test_contains_point_closed(rect, q, expected):
    assert contains_point(rect, q) is expected


@pytest.mark.parametrize(
    "rect, expected",
    [(R(3, 7, 0, 10), True), (R(0, 7, 0, 7), False), (R(0, 12, 4, 5), True)],
)
def test_interior_empty(rect, expected):
    ps = normalize_point_set(TWO, B12)
    assert interior_empty(rect, ps) is expected


def test_is_maximal_empty_examples():
    ps = normalize_point_set(TWO, B12)
    assert is_maximal_empty(R(3, 12, 0, 5), ps)
    assert not is_maximal_empty(R(3, 7, 0, 9), ps)
    assert not is_maximal_empty(ps.bounds, ps)


def _grow_each_side_breaks(r, ps):
    """Independent maximality check: growing any side by one unit either
    leaves the box or puts a point into the interior."""
    b = ps.bounds
    grown = [
        (r.x_lo - 1, r.x_hi, r.y_lo, r.y_hi),
        (r.x_lo, r.x_hi + 1, r.y_lo, r.y_hi),
        (r.x_lo, r.x_hi, r.y_lo - 1, r.y_hi),
        (r.x_lo, r.x_hi, r.y_lo, r.y_hi + 1),
    ]
    for g in grown:
        if g[0] < b.x_lo or g[1] > b.x_hi or g[2] < b.y_lo or g[3] > b.y_hi:
            continue
        if interior_empty(R(*g), ps):
            return False
    return True


def test_enumerate_single_point():
    ps = normalize_point_set([(4, 3)], (0, 0, 10, 10))
    got = {r.as_tuple() for r in enumerate_maximal_empty(ps)}
    assert got == {(0, 0, 4, 10), (4, 0, 10, 10), (0, 0, 10, 3), (0, 3, 10, 10)}


def test_enumerate_two_points():
    ps = normalize_point_set(TWO, B12)
    rects = enumerate_maximal_empty(ps)
    assert len(rects) == 8
    assert sorted(r.area for r in rects) == sorted([30, 50, 48, 60, 40, 12, 45, 42])
    for r in rects:
        assert _grow_each_side_breaks(r, ps)


def test_enumerate_empty_set_is_box():
    ps = normalize_point_set([], (0, 0, 5, 7))
    assert [r.as_tuple() for r in enumerate_maximal_empty(ps)] == [(0, 0, 5, 7)]


@pytest.mark.parametrize("k", [8, 12, 16])
def test_staircase_count_grows_quadratically(k):
    ps = generate("staircase", 2 * k)
    assert len(enumerate_maximal_empty(ps)) >= k * k / 4


def test_oracle_cap():
    ps = random_point_set(random.Random(1), 20)
    with pytest.raises(OracleSizeError):
        enumerate_maximal_empty(ps, cap=10)


@pytest.mark.parametrize(
    "pts, bounds, q, expected",
    [
        ([(4, 3)], (0, 0, 10, 10), (2, 5), ((0, 3, 10, 10), 70)),
        # q sits on the top edge of [0,12]x[0,4]; closed containment makes it
        # the answer (48), not [3,12]x[0,5] (45)
        (TWO, B12, (5, 4), ((0, 0, 12, 4), 48)),
        (TWO, B12, (1, 1), ((0, 0, 12, 4), 48)),
    ],
)
def test_oracle_examples(pts, bounds, q, expected):
    r = oracle_largest_containing(normalize_point_set(pts, bounds), q)
    assert (r.as_tuple(), r.area) == expected


def test_oracle_domain_error():
    ps = normalize_point_set(TWO, B12)
    with pytest.raises(DomainError):
        oracle_largest_containing(ps, (13, 1))


def test_normalize_ok_and_orders():
    ps = normalize_point_set([(3, 1), (1, 2)], (0, 0, 10, 10))
    assert [ps.points[i].x for i in ps.by_x] == [1, 3]
    assert [ps.points[i].y for i in ps.by_y] == [1, 2]


@pytest.mark.parametrize(
    "pts, fragment",
    [([(1, 2), (1, 4)], "x=1"), ([(1, 2), (3, 2)], "y=2"), ([(0, 5)], "strictly inside"), ([(5, 10)], "strictly inside")],
)
def test_normalize_rejects(pts, fragment):
    with pytest.raises(ValidationError, match=fragment):
        normalize_point_set(pts, (0, 0, 10, 10))


def test_normalize_names_both_ids():
    with pytest.raises(ValidationError, match="points 0 and 2"):
        normalize_point_set([(1, 2), (3, 4), (1, 5)], (0, 0, 10, 10))


def test_normalize_rejects_huge_coordinates():
    with pytest.raises(ValidationError):
        normalize_point_set([], (0, 0, 1 << 21, 10))


@settings(max_examples=150, deadline=None)
@given(point_sets())
def test_oracle_rects_are_maximal_and_antichain(ps):
    rects = enumerate_maximal_empty(ps)
    for r in rects:
        assert is_maximal_empty(r, ps)
        assert _grow_each_side_breaks(r, ps)
    for a in rects:
        for b in rects:
            if a is not b:
                inside = b.x_lo <= a.x_lo and a.x_hi <= b.x_hi and b.y_lo <= a.y_lo and a.y_hi <= b.y_hi
                assert not inside


@settings(max_examples=100, deadline=None)
@given(point_sets(max_n=10, side=24), st.integers(0, 24), st.integers(0, 24))
def test_oracle_matches_exhaustive_integer_search(ps, qx, qy):
    """On a small grid every maximal empty rectangle has integer sides, so a
    search over all integer rectangles is an independent ground truth."""
    b = ps.bounds
    best = None
    coords_x = range(b.x_lo, b.x_hi + 1)
    coords_y = range(b.y_lo, b.y_hi + 1)
    for x_lo in coords_x:
        if x_lo > qx:
            break
        for x_hi in coords_x:
            if x_hi <= x_lo or x_hi < qx:
                continue
            inside = [p.y for p in ps.points if x_lo < p.x < x_hi]
            for y_lo in coords_y:
                if y_lo > qy:
                    break
                ceil = min([y for y in inside if y > y_lo], default=b.y_hi)
                if ceil < qy or ceil <= y_lo:
                    continue
                r = R(x_lo, x_hi, y_lo, ceil)
                if best is None or r.key > best.key:
                    best = r
    got = oracle_largest_containing(ps, (qx, qy))
    assert got.key == best.key


@settings(max_examples=60, deadline=None)
@given(point_sets(max_n=12), st.integers(-500, 500), st.integers(-500, 500), st.data())
def test_oracle_translation_invariant(ps, dx, dy, data):
    b = ps.bounds
    q = (data.draw(st.integers(b.x_lo, b.x_hi)), data.draw(st.integers(b.y_lo, b.y_hi)))
    moved = ps.translated(dx, dy)
    a = oracle_largest_containing(ps, q)
    m = oracle_largest_containing(moved, (q[0] + dx, q[1] + dy))
    assert m.area == a.area
    assert m.as_tuple() == (a.x_lo + dx, a.y_lo + dy, a.x_hi + dx, a.y_hi + dy)
