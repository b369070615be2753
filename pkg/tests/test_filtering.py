import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from heaphull.filtering import (
    ExtremeSet,
    build_octagon,
    classify_points,
    find_axis_extremes,
    find_corner_extremes,
    find_extremes,
    find_queue,
    run_filter,
)
from heaphull.geom import Location, PointSet, manhattan, point_in_convex_polygon
from heaphull.hull import filter_rate, oracle_hull
from heaphull.par_reduce import ReduceConfig
from heaphull.pointgen import GenSpec, generate

from oracles import is_strictly_convex_ccw, linear_argmax, linear_argmin

small = st.integers(-12, 12)
int_sets = st.lists(st.tuples(small, small), min_size=1, max_size=60)
CFGS = [ReduceConfig(c, w) for c in (1, 2, 32, 1024) for w in (1, 3, 8)]

SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
DIAMOND = [(1, 0), (0, 1), (-1, 0), (0, -1)]


def P_(points):
    return PointSet.from_points(points)


def test_axis_extremes_unit_square():
    assert find_axis_extremes(P_(SQUARE)) == (1, 2, 0, 0)


def test_axis_extremes_single_point():
    assert find_axis_extremes(P_([(3.5, -1)])) == (0, 0, 0, 0)


def test_axis_extremes_normal_vs_scan():
    P = generate(GenSpec("normal", 10_000, 5))
    x, y = P.x.tolist(), P.y.tolist()
    want = (linear_argmax(x), linear_argmax(y), linear_argmin(x), linear_argmin(y))
    for cfg in (ReduceConfig(), ReduceConfig(7, 4)):
        assert find_axis_extremes(P, cfg) == want


def test_axis_extremes_empty_rejected():
    with pytest.raises(ValueError):
        find_axis_extremes(P_([]))


def test_corner_extremes_square_center():
    P = P_(SQUARE + [(0.5, 0.5)])
    ne, nw, sw, se = find_corner_extremes(P, find_axis_extremes(P))
    assert (ne, nw, sw, se) == (2, 3, 0, 1)


def test_corner_extremes_identical_points():
    P = P_([(2, 2)] * 6)
    assert find_corner_extremes(P, find_axis_extremes(P)) == (0, 0, 0, 0)


def test_corner_extremes_normal_vs_scan():
    P = generate(GenSpec("normal", 10_000, 9))
    e, n, w, s = find_axis_extremes(P)
    xmax, ymax, xmin, ymin = P.x[e], P.y[n], P.x[w], P.y[s]
    pts = P.points()
    want = tuple(
        linear_argmin([manhattan(p, c) for p in pts])
        for c in ((xmax, ymax), (xmin, ymax), (xmin, ymin), (xmax, ymin))
    )
    for cfg in (ReduceConfig(), ReduceConfig(1, 2), ReduceConfig(1000, 8)):
        assert find_corner_extremes(P, (e, n, w, s), cfg) == want


def test_octagon_square_center():
    P = P_(SQUARE + [(0.5, 0.5)])
    oct = build_octagon(P, find_extremes(P))
    assert set(oct.vertices) == {(0, 0), (1, 0), (1, 1), (0, 1)}
    assert len(oct.vertices) == 4
    assert oct.vertices[0] == (1, 0)
    assert is_strictly_convex_ccw(oct.vertices)


def test_octagon_collinear_filters_nothing():
    P = P_([(float(i), 0.0) for i in range(7)])
    E = find_extremes(P)
    oct = build_octagon(P, E)
    assert oct.degenerate and len(oct.vertices) == 2
    assert (classify_points(P, oct, E) != 0).all()


def test_octagon_circle_plus_interior():
    rng = np.random.default_rng(1)
    ring = [(math.cos(2 * math.pi * k / 16), math.sin(2 * math.pi * k / 16)) for k in range(16)]
    r = 0.5 * np.sqrt(rng.random(100))
    t = 2 * np.pi * rng.random(100)
    inner = list(zip(r * np.cos(t), r * np.sin(t)))
    P = P_(ring + inner)
    oct = build_octagon(P, find_extremes(P))
    assert len(set(oct.vertices)) == 8
    assert all(j < 16 for j in oct.indices)
    assert is_strictly_convex_ccw(oct.vertices)


def _extremes_of(points):
    P = P_(points)
    return P, find_extremes(P)


def test_find_queue_unit_square():
    P, E = _extremes_of(SQUARE)
    assert find_queue((2, 2), E, P) == 1
    # west and south are the same point here, so edge west->south is empty and
    # the first strictly-right edge for (-2, -2) is south->east
    assert find_queue((-2, -2), E, P) == 4


def test_find_queue_diamond_quadrants():
    P, E = _extremes_of(DIAMOND)
    assert find_queue((2, 2), E, P) == 1
    assert find_queue((-2, 2), E, P) == 2
    assert find_queue((-2, -2), E, P) == 3
    assert find_queue((2, -2), E, P) == 4


def test_find_queue_corner_straddling_first_match():
    P, E = _extremes_of(DIAMOND)
    # strictly right of both east->north and south->east
    assert find_queue((5, 0.5), E, P) == 1


def test_find_queue_inside_is_contract_violation():
    P, E = _extremes_of(DIAMOND)
    with pytest.raises(ValueError):
        find_queue((0, 0), E, P)


def test_classify_square_center():
    P = P_(SQUARE + [(0.5, 0.5)])
    labels = run_filter(P).labels
    assert labels[4] == 0
    assert (labels[:4] != 0).all()


def test_classify_normal_1e5_filter_rate():
    P = generate(GenSpec("normal", 100_000, 0))
    assert filter_rate(run_filter(P).labels) >= 0.999


def test_classify_on_octagon_edge_discarded():
    # (0.5, 0) lies on the octagon edge between two corner points
    P = P_(SQUARE + [(0.5, 0.0)])
    assert run_filter(P).labels[4] == 0


def _check_filter_invariants(P, fr):
    labels, oct, E = fr.labels, fr.octagon, fr.extremes
    hull = oracle_hull(P)
    verts = set(hull.vertices)
    # soundness: each hull vertex position keeps at least one surviving copy
    surviving = {P[j] for j in np.flatnonzero(labels)}
    assert verts <= surviving
    # octagon vertices are input points, none outside the hull
    for j, v in zip(oct.indices, oct.vertices):
        assert P[j] == v
        if hull.h >= 3:
            assert point_in_convex_polygon(v, hull.vertices) is not Location.OUTSIDE
    assert is_strictly_convex_ccw(oct.vertices)
    assert all(labels[j] != 0 for j in E.axis)
    if not oct.degenerate:
        for j in np.flatnonzero(labels):
            assert point_in_convex_polygon(P[j], oct.vertices) is not Location.STRICTLY_INSIDE
    else:
        assert (labels != 0).all()


@given(int_sets)
def test_filter_invariants_integer_sets(points):
    P = P_(points)
    _check_filter_invariants(P, run_filter(P))


@pytest.mark.parametrize("dist, d", [("normal", 0), ("uniform_disk", 0), ("circle", 2)])
def test_filter_invariants_generated(dist, d):
    P = generate(GenSpec(dist, 3000, 42, d))
    _check_filter_invariants(P, run_filter(P))


@given(int_sets, st.sampled_from(CFGS))
def test_labels_independent_of_config(points, cfg):
    P = P_(points)
    assert run_filter(P, cfg).labels.tobytes() == run_filter(P).labels.tobytes()


def test_labels_identical_1_vs_8_workers():
    P = generate(GenSpec("normal", 10_000, 3))
    a = run_filter(P, ReduceConfig(32, 1)).labels
    b = run_filter(P, ReduceConfig(32, 8)).labels
    assert a.tobytes() == b.tobytes()


def test_extreme_set_candidates_order():
    E = ExtremeSet(0, 1, 2, 3, 4, 5, 6, 7)
    assert E.candidates() == [0, 4, 1, 5, 2, 6, 3, 7]
