"""Hull assembly from the filtered quadrant queues, plus the full-set oracle.

Each quadrant's survivors, together with the axis extremes that bound the
quadrant, are sorted along the quadrant's sweep direction and reduced to a
strictly convex chain with a left-turn stack scan. The four open chains
concatenate into the CCW hull. A full comparison sort replaces the original
heap-based partial ordering; the bound is the same O(n' log n').
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .filtering import ExtremeSet, FilterResult, Octagon, run_filter
from .geom import Point2D, PointSet, left_turn_scan, orient_many, orientation
from .par_reduce import ReduceConfig, ReduceEngine, engine_for


@dataclass(frozen=True)
class QuadQueues:
    q1: np.ndarray
    q2: np.ndarray
    q3: np.ndarray
    q4: np.ndarray

    def __getitem__(self, quadrant: int) -> np.ndarray:
        return (self.q1, self.q2, self.q3, self.q4)[quadrant - 1]


@dataclass(frozen=True)
class HullPolygon:
    """CCW hull, strict vertices only. ``indices`` point back into the input."""

    vertices: tuple[Point2D, ...]
    indices: tuple[int, ...]

    @property
    def h(self) -> int:
        return len(self.vertices)

    def same_cycle(self, other: "HullPolygon") -> bool:
        return cycle_mismatch(self.vertices, other.vertices) is None


def cycle_mismatch(a: Sequence, b: Sequence) -> str | None:
    """None if ``a`` and ``b`` are the same vertex cycle up to rotation,
    otherwise a short description of the first difference."""
    a = [tuple(p) for p in a]
    b = [tuple(p) for p in b]
    if not a or not b:
        return None if a == b else f"size {len(a)} != {len(b)}"
    try:
        k = b.index(a[0])
    except ValueError:
        return f"vertex 0 {a[0]} missing from reference"
    for i, p in enumerate(a):
        if i >= len(b):
            return f"vertex {i} {p} beyond reference size {len(b)}"
        q = b[(k + i) % len(b)]
        if p != q:
            return f"vertex {i}: {p} != {q}"
    if len(a) != len(b):
        return f"size {len(a)} != {len(b)}: reference vertex {b[(k + len(a)) % len(b)]} missing"
    return None


def _polygon(P: PointSet, idx: Sequence[int]) -> HullPolygon:
    idx = [int(j) for j in idx]
    return HullPolygon(tuple(P[j] for j in idx), tuple(idx))


def build_queues(labels: np.ndarray) -> QuadQueues:
    labels = np.asarray(labels)
    return QuadQueues(*(np.flatnonzero(labels == i) for i in (1, 2, 3, 4)))


def _sweep_order(sub: np.ndarray, idx: np.ndarray, quadrant: int) -> np.ndarray:
    x, y = sub[:, 0], sub[:, 1]
    # np.lexsort: last key is primary; the input index breaks exact ties
    keys = {
        1: (idx, y, -x),   # decreasing x, then increasing y
        2: (idx, -x, -y),  # decreasing y, then decreasing x
        3: (idx, -y, x),   # increasing x, then decreasing y
        4: (idx, x, y),    # increasing y, then increasing x
    }[quadrant]
    return np.lexsort(keys)


def _quadrant_chain(xy: np.ndarray, idx: np.ndarray, quadrant: int) -> list[int]:
    if idx.size == 0:
        return []
    sub = xy[idx]
    order = _sweep_order(sub, idx, quadrant)
    kept = left_turn_scan(sub[order, 0].tolist(), sub[order, 1].tolist())
    ordered = idx[order]
    # open chain: the exit point starts the next quadrant
    return [int(ordered[k]) for k in kept[:-1]]


def quadrant_hull(points: Sequence, quadrant: int) -> list[Point2D]:
    """Open convex chain through ``points`` for one quadrant.

    ``points`` must include the quadrant's entry and exit extremes. The chain
    runs from the entry extreme toward the exit extreme, exit excluded.
    """
    if quadrant not in (1, 2, 3, 4):
        raise ValueError(f"quadrant must be 1..4, got {quadrant}")
    if len(points) == 0:
        return []
    xy = np.array([tuple(p) for p in points], dtype=np.float64).reshape(-1, 2)
    chain = _quadrant_chain(xy, np.arange(len(xy)), quadrant)
    return [Point2D(float(xy[j, 0]), float(xy[j, 1])) for j in chain]


def _close_cycle(xy: np.ndarray, cycle: list[int], east: int) -> list[int]:
    """Turn the concatenated chains into a strictly convex CCW cycle.

    Chain junctions can leave repeated or collinear points where an axis
    extreme is not a strict vertex (ties on the bounding box). The cycle is
    already angularly ordered, so a single stack scan started at a vertex known
    to be strict (lexicographic max) cleans it.
    """
    pts = [tuple(p) for p in xy[cycle].tolist()] if cycle else []
    ring: list[int] = []
    rpts: list[tuple[float, float]] = []
    for j, p in zip(cycle, pts):
        if not rpts or rpts[-1] != p:
            ring.append(j)
            rpts.append(p)
    while len(rpts) > 1 and rpts[-1] == rpts[0]:
        ring.pop()
        rpts.pop()
    if len(ring) <= 1:
        return ring or [east]

    top = max(range(len(rpts)), key=lambda k: rpts[k])
    lo = rpts[min(range(len(rpts)), key=lambda k: rpts[k])]
    if all(orientation(lo, rpts[top], p) == 0 for p in rpts):
        bottom = min(range(len(rpts)), key=lambda k: rpts[k])
        return [ring[top], ring[bottom]]

    ring = ring[top:] + ring[:top]
    rpts = rpts[top:] + rpts[:top]
    kept = left_turn_scan([p[0] for p in rpts], [p[1] for p in rpts])
    while len(kept) >= 3 and orientation(rpts[kept[-2]], rpts[kept[-1]], rpts[0]) <= 0:
        kept.pop()
    out = [ring[k] for k in kept]
    ex = tuple(xy[east].tolist())
    for k, j in enumerate(kept):
        if rpts[j] == ex:
            return out[k:] + out[:k]
    return out


@dataclass(frozen=True)
class HeaphullRun:
    hull: HullPolygon
    labels: np.ndarray
    extremes: ExtremeSet
    octagon: Octagon
    filter_s: float
    hull_s: float


def assemble_hull(P: PointSet, labels: np.ndarray, E: ExtremeSet) -> list[int]:
    """Queue compaction, four quadrant chains, CCW concatenation."""
    xy = P.xy
    queues = build_queues(labels)
    axis = E.axis
    cycle: list[int] = []
    for quadrant in (1, 2, 3, 4):
        entry, exit_ = axis[quadrant - 1], axis[quadrant % 4]
        members = queues[quadrant]
        if members.size:
            # only points strictly outside the quadrant's edge belong to the
            # sweep; fallback-labelled points of a degenerate octagon do not
            a, b = xy[entry], xy[exit_]
            members = members[orient_many(a, b, xy[members]) < 0]
        idx = np.concatenate(([entry], members, [exit_])).astype(np.intp)
        cycle.extend(_quadrant_chain(xy, idx, quadrant))
    return _close_cycle(xy, cycle, E.east)


def heaphull_run(P: PointSet, cfg: ReduceConfig | ReduceEngine | None = None) -> HeaphullRun:
    """Full pipeline with per-stage wall times (seconds)."""
    t0 = time.perf_counter()
    with engine_for(cfg) as eng:
        fr: FilterResult = run_filter(P, eng)
    t1 = time.perf_counter()
    idx = assemble_hull(P, fr.labels, fr.extremes)
    hull = _polygon(P, idx)
    t2 = time.perf_counter()
    return HeaphullRun(hull, fr.labels, fr.extremes, fr.octagon, t1 - t0, t2 - t1)


def heaphull(P: PointSet, cfg: ReduceConfig | ReduceEngine | None = None) -> HullPolygon:
    return heaphull_run(P, cfg).hull


def oracle_hull(P: PointSet) -> HullPolygon:
    """Andrew's monotone chain over the whole set; strict vertices, CCW,
    starting at the lexicographically smallest point."""
    xy = P.xy
    order = np.lexsort((np.arange(P.n), xy[:, 1], xy[:, 0]))
    s = xy[order]
    # drop exact repeats (sorted, so they are adjacent)
    keep = np.ones(len(order), dtype=bool)
    keep[1:] = (s[1:, 0] != s[:-1, 0]) | (s[1:, 1] != s[:-1, 1])
    order, s = order[keep], s[keep]
    if len(order) <= 2:
        return _polygon(P, order)
    xs, ys = s[:, 0].tolist(), s[:, 1].tolist()
    lower = left_turn_scan(xs, ys)
    m = len(xs) - 1
    upper = [m - k for k in left_turn_scan(xs[::-1], ys[::-1])]
    ring = lower[:-1] + upper[:-1]
    return _polygon(P, order[ring])


def filter_rate(labels) -> float:
    labels = np.asarray(labels)
    if labels.size == 0:
        raise ValueError("empty label array")
    return float(np.count_nonzero(labels == 0)) / labels.size
