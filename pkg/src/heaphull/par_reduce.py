"""Deterministic chunked data-parallel engine.

Stands in for a GPU reduction: the input is cut into fixed-size chunks (the
analog of a thread block / warp), each worker owns a contiguous run of whole
chunks, every chunk produces a partial ``(key, index)`` and partials are merged
with an associative, commutative, tie-broken combine. Because ties always go to
the smaller index, the result does not depend on ``chunk_size`` or ``workers``.

Work inside a span is numpy-vectorized, so threads make progress in parallel
whenever numpy releases the GIL.
"""
from __future__ import annotations

import math
from contextlib import contextmanager
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import reduce
from typing import Callable, Sequence

import numpy as np

DEFAULT_CHUNK = 32


@dataclass(frozen=True)
class ReduceConfig:
    chunk_size: int = DEFAULT_CHUNK
    workers: int = 1

    def __post_init__(self):
        if int(self.chunk_size) != self.chunk_size or self.chunk_size < 1:
            raise ValueError(f"chunk_size must be a positive integer, got {self.chunk_size!r}")
        if int(self.workers) != self.workers or self.workers < 1:
            raise ValueError(f"workers must be a positive integer, got {self.workers!r}")


@dataclass(frozen=True)
class ArgReduceKey:
    key: float
    index: int


def combine_min(a: ArgReduceKey, b: ArgReduceKey) -> ArgReduceKey:
    """Smaller key wins; equal keys go to the smaller index."""
    if a.key < b.key or (a.key == b.key and a.index <= b.index):
        return a
    return b


def combine_max(a: ArgReduceKey, b: ArgReduceKey) -> ArgReduceKey:
    """Larger key wins; equal keys go to the smaller index."""
    if a.key > b.key or (a.key == b.key and a.index <= b.index):
        return a
    return b


def _span_argmin(v: np.ndarray, lo: int, chunk: int) -> ArgReduceKey:
    # one partial per chunk, then first-occurrence argmin over the partials;
    # both argmin calls return the first minimum so ties go to the lower index
    m = v.shape[0]
    full = (m // chunk) * chunk
    parts = []
    if full:
        blocks = v[:full].reshape(-1, chunk)
        loc = blocks.argmin(axis=1)
        mins = np.take_along_axis(blocks, loc[:, None], axis=1)[:, 0]
        c = int(mins.argmin())
        parts.append(ArgReduceKey(float(mins[c]), lo + c * chunk + int(loc[c])))
    if full < m:
        tail = v[full:]
        t = int(tail.argmin())
        parts.append(ArgReduceKey(float(tail[t]), lo + full + t))
    return reduce(combine_min, parts)


class ReduceEngine:
    """Worker pool plus the chunking policy from a :class:`ReduceConfig`.

    One caller at a time per instance. Use as a context manager, or call
    :meth:`close` when done.
    """

    def __init__(self, cfg: ReduceConfig | None = None):
        self.cfg = cfg or ReduceConfig()
        self._pool = ThreadPoolExecutor(self.cfg.workers) if self.cfg.workers > 1 else None

    def close(self):
        if self._pool is not None:
            self._pool.shutdown()
            self._pool = None

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    def spans(self, n: int) -> list[tuple[int, int]]:
        """Split ``range(n)`` into at most ``workers`` runs of whole chunks."""
        chunk = self.cfg.chunk_size
        nchunks = math.ceil(n / chunk)
        per = math.ceil(nchunks / self.cfg.workers)
        return [(c * chunk, min(n, (c + per) * chunk)) for c in range(0, nchunks, per)]

    def _run(self, fn, spans):
        if self._pool is None or len(spans) == 1:
            return [fn(s) for s in spans]
        return list(self._pool.map(fn, spans))

    def arg_reduce(
        self,
        n: int,
        key_fn: Callable[[int, int], np.ndarray],
        maximize: Sequence[bool],
    ) -> list[int]:
        """Run several arg-reductions over ``range(n)`` in one pass.

        ``key_fn(lo, hi)`` returns k key rows of length ``hi - lo`` (a 2-D array
        or a list of 1-D arrays) for the span; row r is minimized, or maximized
        if ``maximize[r]``. Returns k indices.
        """
        if n < 1:
            raise ValueError("cannot reduce an empty sequence")
        chunk = self.cfg.chunk_size

        def work(span):
            lo, hi = span
            keys = key_fn(lo, hi)
            if isinstance(keys, np.ndarray) and keys.ndim == 1:
                keys = [keys]
            # negation is exact, so argmax-with-low-index == argmin of the negated row
            return [
                _span_argmin(-row if mx else row, lo, chunk)
                for row, mx in zip(keys, maximize)
            ]

        partials = self._run(work, self.spans(n))
        out = []
        for r in range(len(maximize)):
            best = reduce(combine_min, (p[r] for p in partials))
            out.append(best.index)
        return out

    def argmin(self, keys) -> int:
        keys = _check_keys(keys)
        return self.arg_reduce(len(keys), lambda lo, hi: keys[lo:hi], [False])[0]

    def argmax(self, keys) -> int:
        keys = _check_keys(keys)
        return self.arg_reduce(len(keys), lambda lo, hi: keys[lo:hi], [True])[0]

    def map_spans(self, n: int, fn: Callable[[int, int], np.ndarray], dtype) -> np.ndarray:
        """Fill ``out[lo:hi] = fn(lo, hi)`` for every span; spans never overlap."""
        out = np.empty(n, dtype=dtype)

        def work(span):
            lo, hi = span
            out[lo:hi] = fn(lo, hi)

        self._run(work, self.spans(n))
        return out

    def map(self, items: Sequence, f: Callable) -> list:
        """Per-item map: ``out[j] = f(items[j])``. ``f`` must be pure."""

        def work(span):
            lo, hi = span
            return [f(items[j]) for j in range(lo, hi)]

        out = []
        for part in self._run(work, self.spans(len(items))):
            out.extend(part)
        return out


@contextmanager
def engine_for(cfg: "ReduceConfig | ReduceEngine | None"):
    """Yield ``cfg`` itself if it is already an engine, else a fresh one."""
    if isinstance(cfg, ReduceEngine):
        yield cfg
    else:
        with ReduceEngine(cfg) as eng:
            yield eng


def _check_keys(keys) -> np.ndarray:
    keys = np.asarray(keys, dtype=np.float64)
    if keys.ndim != 1:
        raise ValueError("keys must be one-dimensional")
    if keys.size == 0:
        raise ValueError("cannot reduce an empty sequence")
    if not np.isfinite(keys).all():
        raise ValueError("keys must be finite")
    return keys


def chunked_argmin(keys, cfg: ReduceConfig | None = None) -> int:
    with ReduceEngine(cfg) as eng:
        return eng.argmin(keys)


def chunked_argmax(keys, cfg: ReduceConfig | None = None) -> int:
    with ReduceEngine(cfg) as eng:
        return eng.argmax(keys)


def parallel_map(points, f: Callable, cfg: ReduceConfig | None = None) -> list:
    """``[f(points[j]) for j in range(len(points))]``, computed chunk-parallel."""
    with ReduceEngine(cfg) as eng:
        return eng.map(points, f)
