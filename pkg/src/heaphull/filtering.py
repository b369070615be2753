"""Octagon pre-filter.

Two dependent reduction passes find the four axis extremes and then the four
points closest (in Manhattan distance) to the bounding-box corners. Those eight
points span a convex polygon of at most eight vertices that lies inside the
hull; every point inside it or on its boundary is discarded (label 0). Each
survivor is tagged with the quadrant queue it belongs to:

    1: outside edge east -> north      2: outside edge north -> west
    3: outside edge west -> south      4: outside edge south -> east
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geom import Point2D, PointSet, left_turn_scan, orient_many, orientation
from .par_reduce import ReduceConfig, ReduceEngine, engine_for

# label given to a survivor that is not strictly outside any quadrilateral
# edge; only reachable when the octagon is degenerate
FALLBACK_LABEL = 1


@dataclass(frozen=True)
class ExtremeSet:
    east: int
    north: int
    west: int
    south: int
    corner_ne: int
    corner_nw: int
    corner_sw: int
    corner_se: int

    @property
    def axis(self) -> tuple[int, int, int, int]:
        return (self.east, self.north, self.west, self.south)

    @property
    def corners(self) -> tuple[int, int, int, int]:
        return (self.corner_ne, self.corner_nw, self.corner_sw, self.corner_se)

    def candidates(self) -> list[int]:
        """The eight indices in CCW candidate order, starting at east."""
        return [
            self.east, self.corner_ne, self.north, self.corner_nw,
            self.west, self.corner_sw, self.south, self.corner_se,
        ]


@dataclass(frozen=True)
class Octagon:
    vertices: tuple[Point2D, ...]
    indices: tuple[int, ...]

    @property
    def degenerate(self) -> bool:
        """Fewer than three vertices: there is no interior, filter nothing."""
        return len(self.vertices) < 3


@dataclass(frozen=True)
class FilterResult:
    extremes: ExtremeSet
    octagon: Octagon
    labels: np.ndarray


def find_axis_extremes(P: PointSet, cfg: ReduceConfig | ReduceEngine | None = None):
    """Indices of (east, north, west, south); ties go to the smaller index."""
    x, y = P.x, P.y
    with engine_for(cfg) as eng:
        e, n, w, s = eng.arg_reduce(
            P.n,
            lambda lo, hi: (x[lo:hi], y[lo:hi], x[lo:hi], y[lo:hi]),
            maximize=(True, True, False, False),
        )
    return e, n, w, s


def find_corner_extremes(P: PointSet, axis, cfg: ReduceConfig | ReduceEngine | None = None):
    """Indices of the points Manhattan-closest to the NE, NW, SW, SE box corners."""
    east, north, west, south = axis
    x, y = P.x, P.y
    xmax, ymax = float(x[east]), float(y[north])
    xmin, ymin = float(x[west]), float(y[south])

    def keys(lo, hi):
        xs, ys = x[lo:hi], y[lo:hi]
        # near-max-magnitude inputs may overflow to inf; that only coarsens
        # the candidate choice, which never affects correctness
        with np.errstate(over="ignore"):
            dx_hi, dx_lo = np.abs(xs - xmax), np.abs(xs - xmin)
            dy_hi, dy_lo = np.abs(ys - ymax), np.abs(ys - ymin)
            return (dx_hi + dy_hi, dx_lo + dy_hi, dx_lo + dy_lo, dx_hi + dy_lo)

    with engine_for(cfg) as eng:
        ne, nw, sw, se = eng.arg_reduce(P.n, keys, maximize=(False,) * 4)
    return ne, nw, sw, se


def find_extremes(P: PointSet, cfg: ReduceConfig | ReduceEngine | None = None) -> ExtremeSet:
    with engine_for(cfg) as eng:
        axis = find_axis_extremes(P, eng)
        # second pass needs the bounding box from the first
        corners = find_corner_extremes(P, axis, eng)
    return ExtremeSet(*axis, *corners)


def build_octagon(P: PointSet, E: ExtremeSet) -> Octagon:
    """Strictly convex CCW polygon on the extreme points.

    Repeated points and candidates that would create a zero or reflex turn are
    dropped. The result starts at the earliest surviving candidate (east when
    east is a vertex) and has between one and eight vertices.
    """
    cand = E.candidates()
    # dedupe by coordinates, first candidate wins
    seen: dict[tuple[float, float], int] = {}
    for j in cand:
        seen.setdefault((float(P.xy[j, 0]), float(P.xy[j, 1])), j)
    uniq = list(seen.values())
    rank = {j: r for r, j in enumerate(uniq)}

    if len(uniq) <= 2:
        ring = uniq
    else:
        order = sorted(uniq, key=lambda j: (P.xy[j, 0], P.xy[j, 1]))
        xs = [float(P.xy[j, 0]) for j in order]
        ys = [float(P.xy[j, 1]) for j in order]
        lower = [order[k] for k in left_turn_scan(xs, ys)]
        upper = [order[::-1][k] for k in left_turn_scan(xs[::-1], ys[::-1])]
        ring = lower[:-1] + upper[:-1]
        if len(ring) < 3:
            # collinear: keep the two ends
            ring = [order[0], order[-1]]
    start = min(range(len(ring)), key=lambda k: rank[ring[k]])
    ring = ring[start:] + ring[:start]
    return Octagon(tuple(P[j] for j in ring), tuple(ring))


def _quad_edges(P: PointSet, E: ExtremeSet):
    a = [P[j] for j in E.axis]
    return [(a[i], a[(i + 1) % 4]) for i in range(4)]


def find_queue(p, E: ExtremeSet, P: PointSet) -> int:
    """Quadrant (1..4) of a point lying outside the axis-extreme quadrilateral.

    Edges are tried in the fixed order 1..4 and the first one that has ``p``
    strictly on its right wins.
    """
    for i, (a, b) in enumerate(_quad_edges(P, E), start=1):
        if orientation(a, b, p) < 0:
            return i
    raise ValueError(f"point {tuple(p)} is not outside the extreme quadrilateral")


def quadrant_codes(xy: np.ndarray, E: ExtremeSet, P: PointSet) -> np.ndarray:
    """Vectorized :func:`find_queue`; 0 where no edge has the point on its right."""
    q = np.zeros(xy.shape[0], dtype=np.int8)
    edges = _quad_edges(P, E)
    # write in reverse so the lowest-numbered matching edge wins
    for i in (4, 3, 2, 1):
        a, b = edges[i - 1]
        q[orient_many(a, b, xy) < 0] = i
    return q


def classify_points(
    P: PointSet,
    oct: Octagon,
    E: ExtremeSet,
    cfg: ReduceConfig | ReduceEngine | None = None,
) -> np.ndarray:
    """Label array: 0 for points inside or on the octagon, else the quadrant.

    Octagon vertices and the four axis extremes are always kept: axis extremes
    get the quadrant they open (east 1, north 2, west 3, south 4), other
    octagon vertices get their :func:`find_queue` quadrant.
    """
    xy = P.xy
    ring = oct.vertices
    edges = [(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))]
    degenerate = oct.degenerate

    def label_span(lo, hi):
        sub = xy[lo:hi]
        q = quadrant_codes(sub, E, P)
        q[q == 0] = FALLBACK_LABEL
        if degenerate:
            return q
        inside = np.ones(sub.shape[0], dtype=bool)
        for a, b in edges:
            inside &= orient_many(a, b, sub) >= 0
        q[inside] = 0
        return q

    with engine_for(cfg) as eng:
        labels = eng.map_spans(P.n, label_span, np.int8)

    for j in oct.indices:
        if labels[j] == 0:
            q = quadrant_codes(xy[j : j + 1], E, P)[0]
            labels[j] = q if q else FALLBACK_LABEL
    # reverse order so east wins when one index is several axis extremes
    for j, lab in zip(reversed(E.axis), (4, 3, 2, 1)):
        labels[j] = lab
    return labels


def run_filter(P: PointSet, cfg: ReduceConfig | ReduceEngine | None = None) -> FilterResult:
    """Whole filtering stage: extremes, octagon, labels."""
    with engine_for(cfg) as eng:
        E = find_extremes(P, eng)
        oct = build_octagon(P, E)
        labels = classify_points(P, oct, E, eng)
    return FilterResult(E, oct, labels)
