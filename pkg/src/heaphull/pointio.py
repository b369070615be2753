"""Point-file formats.

text:   one ``x y`` pair per line, whitespace separated; lines whose first
        non-blank character is ``#`` and blank lines are skipped.
binary: ``b"PTS2"``, a little-endian uint64 count, then ``count`` pairs of
        little-endian float64 ``(x, y)``. Always little-endian.
"""
from __future__ import annotations

import math
import struct

import numpy as np

from .geom import PointSet

FORMATS = ("text", "binary")
MAGIC = b"PTS2"
_HEADER = struct.Struct("<4sQ")
_PAIR = np.dtype("<f8")


class PointFormatError(ValueError):
    """Malformed point file; the message carries the line or byte position."""


def _fmt(v: float) -> str:
    s = repr(float(v))
    return s[:-2] if s.endswith(".0") else s


def _read_text(path) -> np.ndarray:
    rows = []
    with open(path, "r", encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            parts = stripped.split()
            if len(parts) != 2:
                raise PointFormatError(f"{path}:{lineno}: expected 2 values, got {len(parts)}")
            try:
                x, y = float(parts[0]), float(parts[1])
            except ValueError:
                raise PointFormatError(f"{path}:{lineno}: not a number: {stripped!r}") from None
            if not (math.isfinite(x) and math.isfinite(y)):
                raise PointFormatError(f"{path}:{lineno}: non-finite value: {stripped!r}")
            rows.append((x, y))
    if not rows:
        raise PointFormatError(f"{path}: no points")
    return np.array(rows, dtype=np.float64)


def _read_binary(path) -> np.ndarray:
    with open(path, "rb") as f:
        data = f.read()
    if len(data) < _HEADER.size:
        raise PointFormatError(f"{path}: truncated header ({len(data)} of {_HEADER.size} bytes)")
    magic, count = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise PointFormatError(f"{path}: bad magic {magic!r} at byte 0")
    if count == 0:
        raise PointFormatError(f"{path}: empty point set (count = 0)")
    want = _HEADER.size + 16 * count
    if len(data) < want:
        raise PointFormatError(
            f"{path}: truncated payload at byte {len(data)}, expected {want} bytes for {count} points"
        )
    if len(data) > want:
        raise PointFormatError(f"{path}: {len(data) - want} trailing bytes after byte {want}")
    flat = np.frombuffer(data, dtype=_PAIR, count=2 * count, offset=_HEADER.size)
    bad = ~np.isfinite(flat)
    if bad.any():
        k = int(np.flatnonzero(bad)[0])
        raise PointFormatError(
            f"{path}: non-finite value at byte {_HEADER.size + 8 * k} (point {k // 2})"
        )
    return flat.astype(np.float64).reshape(count, 2)


def read_points(path, fmt: str = "text") -> PointSet:
    if fmt == "text":
        return PointSet(_read_text(path))
    if fmt == "binary":
        return PointSet(_read_binary(path))
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def write_points(P, path, fmt: str = "text") -> None:
    """Write a PointSet (or an (n, 2) array / list of pairs) to ``path``."""
    xy = P.xy if isinstance(P, PointSet) else np.asarray(P, dtype=np.float64).reshape(-1, 2)
    if fmt == "text":
        body = "".join(f"{_fmt(x)} {_fmt(y)}\n" for x, y in xy.tolist())
        with open(path, "w", encoding="utf-8") as f:
            f.write(body)
    elif fmt == "binary":
        with open(path, "wb") as f:
            f.write(_HEADER.pack(MAGIC, xy.shape[0]))
            f.write(np.ascontiguousarray(xy, dtype=_PAIR).tobytes())
    else:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
