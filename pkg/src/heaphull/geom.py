"""Planar primitives: points, the orientation predicate, Manhattan distance,
and convex-polygon containment.

The orientation predicate is adaptive: the float64 determinant is trusted
when it clears a forward error bound, otherwise the sign is recomputed
exactly with rationals (every float is an exact fraction). Signs are
therefore exact for any finite input, independent of argument order.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np


class Point2D(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class PointSet:
    """Dense, immutable array of 2D points.

    ``xy`` has shape (n, 2), dtype float64, and is marked read-only so index
    ``j`` refers to the same point for the lifetime of the set. A float64
    C-contiguous array is adopted without a copy (and frozen in place).
    """

    xy: np.ndarray

    def __post_init__(self):
        xy = np.ascontiguousarray(self.xy, dtype=np.float64)
        if xy.ndim != 2 or xy.shape[1] != 2:
            raise ValueError(f"expected an (n, 2) array, got shape {xy.shape}")
        if xy.shape[0] == 0:
            raise ValueError("empty point set")
        bad = ~np.isfinite(xy).all(axis=1)
        if bad.any():
            j = int(np.flatnonzero(bad)[0])
            raise ValueError(f"non-finite coordinate at point {j}: {tuple(xy[j])}")
        xy.flags.writeable = False
        object.__setattr__(self, "xy", xy)

    @classmethod
    def from_points(cls, points: Iterable[Sequence[float]]) -> "PointSet":
        arr = np.array([tuple(p) for p in points], dtype=np.float64)
        return cls(arr.reshape(-1, 2))

    @property
    def n(self) -> int:
        return self.xy.shape[0]

    @property
    def x(self) -> np.ndarray:
        return self.xy[:, 0]

    @property
    def y(self) -> np.ndarray:
        return self.xy[:, 1]

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, j: int) -> Point2D:
        return Point2D(float(self.xy[j, 0]), float(self.xy[j, 1]))

    def points(self) -> list[Point2D]:
        return [Point2D(x, y) for x, y in self.xy.tolist()]


# relative bound for the float determinant (Shewchuk's ccwerrboundA), plus an
# absolute floor that covers underflow in the products
_ERR_REL = (3.0 + 16.0 * 2.0**-53) * 2.0**-53
_ERR_ABS = 2.0**-960


def _exact_sign(ax, ay, bx, by, cx, cy) -> int:
    F = Fraction
    d = (F(bx) - F(ax)) * (F(cy) - F(ay)) - (F(by) - F(ay)) * (F(cx) - F(ax))
    return (d > 0) - (d < 0)


def _orient(ax, ay, bx, by, cx, cy) -> int:
    l = (bx - ax) * (cy - ay)
    r = (by - ay) * (cx - ax)
    d = l - r
    if abs(d) > _ERR_REL * (abs(l) + abs(r)) + _ERR_ABS and d - d == 0:
        return (d > 0) - (d < 0)
    return _exact_sign(ax, ay, bx, by, cx, cy)


def orientation(a, b, c) -> int:
    """Sign of the turn a -> b -> c: +1 left (CCW), -1 right (CW), 0 collinear."""
    return _orient(float(a[0]), float(a[1]), float(b[0]), float(b[1]), float(c[0]), float(c[1]))


def orient_many(a, b, xy: np.ndarray) -> np.ndarray:
    """Orientation of (a, b, p) for every row p of ``xy``.

    Returns float64 values whose signs are exact: the float determinant where
    it is certain, otherwise the exact sign as -1.0, 0.0 or 1.0.
    """
    ax, ay, bx, by = float(a[0]), float(a[1]), float(b[0]), float(b[1])
    with np.errstate(over="ignore", invalid="ignore"):
        l = (bx - ax) * (xy[:, 1] - ay)
        r = (by - ay) * (xy[:, 0] - ax)
        d = l - r
        unsure = ~(np.abs(d) > _ERR_REL * (np.abs(l) + np.abs(r)) + _ERR_ABS)
    if unsure.any():
        d = d.copy()
        for k in np.flatnonzero(unsure).tolist():
            d[k] = _exact_sign(ax, ay, bx, by, float(xy[k, 0]), float(xy[k, 1]))
    return d


def manhattan(a, b) -> float:
    return abs(a[0] - b[0]) + abs(a[1] - b[1])


class Location(enum.Enum):
    STRICTLY_INSIDE = "strictly_inside"
    ON_BOUNDARY = "on_boundary"
    OUTSIDE = "outside"


def point_in_convex_polygon(p, poly: Sequence) -> Location:
    """Locate ``p`` against a strictly convex CCW polygon."""
    m = len(poly)
    if m < 3:
        raise ValueError(f"polygon needs at least 3 vertices, got {m}")
    on_edge = False
    for i in range(m):
        s = orientation(poly[i], poly[(i + 1) % m], p)
        if s < 0:
            return Location.OUTSIDE
        if s == 0:
            on_edge = True
    return Location.ON_BOUNDARY if on_edge else Location.STRICTLY_INSIDE


def left_turn_scan(xs: Sequence[float], ys: Sequence[float]) -> list[int]:
    """Stack scan over points in the given order, keeping strict left turns.

    Returns the positions that survive. Collinear and repeated points are
    popped (a zero turn counts as "not left"), so the output chain is strictly
    convex. This is the inner loop of every chain and hull routine here.
    """
    stack: list[int] = []
    for k in range(len(xs)):
        px, py = xs[k], ys[k]
        while len(stack) >= 2:
            a, b = stack[-2], stack[-1]
            ax, ay = xs[a], ys[a]
            # inlined fast path of _orient
            l = (xs[b] - ax) * (py - ay)
            r = (ys[b] - ay) * (px - ax)
            d = l - r
            if not (abs(d) > _ERR_REL * (abs(l) + abs(r)) + _ERR_ABS and d - d == 0):
                d = _exact_sign(ax, ay, xs[b], ys[b], px, py)
            if d > 0:
                break
            stack.pop()
        stack.append(k)
    return stack
