import random

import pytest
from hypothesis import given, settings

from emptyrect.anchored import compute_anchored
from emptyrect.geometry import enumerate_maximal_empty, is_maximal_empty, normalize_point_set, touches_boundary

from conftest import point_sets, random_point_set


def tuples(rects):
    return {r.as_tuple() for r in rects}


def boundary_subset(ps):
    return tuples(r for r in enumerate_maximal_empty(ps) if touches_boundary(r, ps.bounds))


def test_single_point_gives_four_class_i():
    ps = normalize_point_set([(4, 3)], (0, 0, 10, 10))
    out = compute_anchored(ps)
    assert tuples(out) == {(0, 0, 4, 10), (4, 0, 10, 10), (0, 0, 10, 3), (0, 3, 10, 10)}
    assert {r.provenance for r in out} == {"anchored:i"}


def test_empty_set_gives_box():
    ps = normalize_point_set([], (0, 0, 10, 10))
    assert tuples(compute_anchored(ps)) == {(0, 0, 10, 10)}


def test_corner_class_example():
    ps = normalize_point_set([(1, 9), (5, 5), (9, 1)], (0, 0, 10, 10))
    out = {r.as_tuple(): r for r in compute_anchored(ps)}
    for t in [(1, 5, 10, 10), (5, 1, 10, 10)]:
        assert t in out
        assert out[t].provenance == "anchored:ii"
        assert is_maximal_empty(out[t], ps)


def test_two_points_all_rects_touch_boundary():
    ps = normalize_point_set([(3, 4), (7, 5)], (0, 0, 12, 10))
    assert tuples(compute_anchored(ps)) == tuples(enumerate_maximal_empty(ps))


def test_no_duplicates_and_lowest_class_tag():
    ps = random_point_set(random.Random(3), 40)
    out = compute_anchored(ps)
    assert len(out) == len(tuples(out))
    # a rectangle using three box sides is always tagged class i
    b = ps.bounds
    for r in out:
        sides = sum([r.x_lo == b.x_lo, r.x_hi == b.x_hi, r.y_lo == b.y_lo, r.y_hi == b.y_hi])
        if sides >= 3:
            assert r.provenance == "anchored:i"


@pytest.mark.parametrize("seed", range(20))
def test_matches_oracle_boundary_subset(seed):
    rng = random.Random(seed)
    ps = random_point_set(rng, rng.randint(0, 64))
    out = compute_anchored(ps)
    assert tuples(out) == boundary_subset(ps)
    assert all(is_maximal_empty(r, ps) for r in out)


@settings(max_examples=150, deadline=None)
@given(point_sets(max_n=14, side=20))
def test_matches_oracle_on_dense_grids(ps):
    assert tuples(compute_anchored(ps)) == boundary_subset(ps)


@pytest.mark.parametrize("n", [64, 256, 1024])
def test_linear_size(n):
    ps = random_point_set(random.Random(n), n)
    assert len(compute_anchored(ps)) <= 12 * n + 4
