"""Seeded synthetic point sets.

The random stream is SplitMix64 (Steele, Lea & Flood 2014), written out here
so any implementation can reproduce it bit for bit::

    GAMMA = 0x9E3779B97F4A7C15
    state_k = seed + k * GAMMA  (mod 2**64), k = 1, 2, 3, ...
    z = state_k
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9  (mod 2**64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB  (mod 2**64)
    out_k = z ^ (z >> 31)

Output k maps to a double in [0, 1) as ``(out_k >> 11) * 2**-53``. Point j
consumes outputs 2j+1 and 2j+2, giving ``u = U[2j+1]`` and ``v = U[2j+2]``:

    uniform_square   (u, v)
    uniform_disk     r = sqrt(u), t = 2 pi v             -> (r cos t, r sin t)
    circle           t = 2 pi u, r = 1 + (2v - 1) d/100  -> (r cos t, r sin t)
    normal           R = sqrt(-2 ln(1 - u)), t = 2 pi v  -> (R cos t, R sin t)

The normal case is the Box-Muller transform; both outputs are used, one per
coordinate. The circle's radial displacement is symmetric uniform in
[-d%, +d%] of the unit radius.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geom import PointSet

DISTRIBUTIONS = ("normal", "uniform_square", "uniform_disk", "circle")

GAMMA = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_BLOCK = 1 << 20


@dataclass(frozen=True)
class GenSpec:
    distribution: str
    n: int
    seed: int = 0
    distort_pct: float = 0.0

    def __post_init__(self):
        if self.distribution not in DISTRIBUTIONS:
            raise ValueError(
                f"unknown distribution {self.distribution!r}; expected one of {DISTRIBUTIONS}"
            )
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if not (np.isfinite(self.distort_pct) and self.distort_pct >= 0):
            raise ValueError(f"distort_pct must be a nonnegative number, got {self.distort_pct!r}")
        if self.distort_pct != 0 and self.distribution != "circle":
            raise ValueError("distort_pct is only valid for the circle distribution")


def splitmix64(seed: int, start: int, count: int) -> np.ndarray:
    """Outputs ``start+1 .. start+count`` of the SplitMix64 stream for ``seed``."""
    k = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed % (1 << 64)) + k * GAMMA
        z = (z ^ (z >> np.uint64(30))) * _M1
        z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


def uniform01(seed: int, start: int, count: int) -> np.ndarray:
    return (splitmix64(seed, start, count) >> np.uint64(11)).astype(np.float64) * 2.0**-53


def _block(spec: GenSpec, j0: int, m: int) -> np.ndarray:
    uv = uniform01(spec.seed, 2 * j0, 2 * m).reshape(m, 2)
    u, v = uv[:, 0], uv[:, 1]
    if spec.distribution == "uniform_square":
        return uv
    if spec.distribution == "uniform_disk":
        r, t = np.sqrt(u), 2.0 * np.pi * v
    elif spec.distribution == "circle":
        t = 2.0 * np.pi * u
        r = 1.0 + (2.0 * v - 1.0) * (spec.distort_pct / 100.0)
    else:
        r, t = np.sqrt(-2.0 * np.log(1.0 - u)), 2.0 * np.pi * v
    return np.column_stack((r * np.cos(t), r * np.sin(t)))


def generate_array(spec: GenSpec) -> np.ndarray:
    out = np.empty((spec.n, 2), dtype=np.float64)
    for j0 in range(0, spec.n, _BLOCK):
        m = min(_BLOCK, spec.n - j0)
        out[j0 : j0 + m] = _block(spec, j0, m)
    return out


def generate(spec: GenSpec) -> PointSet:
    return PointSet(generate_array(spec))
