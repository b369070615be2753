"""Independent reference computations used only by the tests."""
import math

import numpy as np


def linear_argmin(keys):
    best = 0
    for j in range(1, len(keys)):
        if keys[j] < keys[best]:
            best = j
    return best


def linear_argmax(keys):
    best = 0
    for j in range(1, len(keys)):
        if keys[j] > keys[best]:
            best = j
    return best


def brute_force_hull(points):
    """Strict hull vertices, CCW, by the supporting-line test. O(n^3).

    Vertex ``a`` is kept iff some other point ``b`` has every point weakly left
    of a->b, with every point on that line lying on the ray from a through b.
    Vertices are ordered by angle around their centroid.
    """
    pts = list(dict.fromkeys(tuple(map(float, p)) for p in points))
    if len(pts) == 1:
        return pts
    A = np.array(pts)
    keep = []
    for a in range(len(A)):
        d = A - A[a]
        cross = d[:, None, 0] * d[None, :, 1] - d[:, None, 1] * d[None, :, 0]
        dot = d @ d.T
        ok = (cross >= 0).all(axis=1) & ((cross != 0) | (dot >= 0)).all(axis=1)
        ok[a] = False
        if ok.any():
            keep.append(pts[a])
    if len(keep) <= 2:
        return keep
    cx = sum(p[0] for p in keep) / len(keep)
    cy = sum(p[1] for p in keep) / len(keep)
    return sorted(keep, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))


def is_strictly_convex_ccw(vertices):
    m = len(vertices)
    if m < 3:
        return True
    for i in range(m):
        (ax, ay), (bx, by), (cx, cy) = vertices[i - 2], vertices[i - 1], vertices[i]
        if (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) <= 0:
            return False
    return True
