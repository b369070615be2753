"""Benchmark harness: repeated heaphull runs with per-stage wall times."""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass, fields
from statistics import fmean

from .hull import filter_rate, heaphull_run
from .par_reduce import ReduceConfig, ReduceEngine
from .pointgen import GenSpec, generate


@dataclass
class BenchReport:
    n: int
    distribution: str
    reps: int
    filter_ms: float
    hull_ms: float
    total_ms: float
    filter_rate: float
    hull_size: int
    threads: int
    chunk: int


FIELDS = tuple(f.name for f in fields(BenchReport))
TIMING_FIELDS = ("filter_ms", "hull_ms", "total_ms")


def run_bench(spec: GenSpec, reps: int = 100, cfg: ReduceConfig | None = None) -> BenchReport:
    """Generate ``spec`` once, run heaphull ``reps`` times, average.

    ``filter_ms`` covers extremes, octagon and label materialization;
    ``hull_ms`` covers queue compaction, the quadrant chains and assembly;
    ``total_ms`` is measured around the whole call.
    """
    if reps < 1:
        raise ValueError(f"reps must be positive, got {reps}")
    cfg = cfg or ReduceConfig()
    P = generate(spec)
    filt, hull, total, rates = [], [], [], set()
    with ReduceEngine(cfg) as eng:
        for _ in range(reps):
            t0 = time.perf_counter()
            run = heaphull_run(P, eng)
            total.append(time.perf_counter() - t0)
            filt.append(run.filter_s)
            hull.append(run.hull_s)
            rates.add(filter_rate(run.labels))
    # labels are deterministic, so every rep yields the same rate
    if len(rates) != 1:
        raise RuntimeError(f"filter rate varied across reps: {sorted(rates)}")
    return BenchReport(
        n=spec.n,
        distribution=spec.distribution,
        reps=reps,
        filter_ms=1e3 * fmean(filt),
        hull_ms=1e3 * fmean(hull),
        total_ms=1e3 * fmean(total),
        filter_rate=rates.pop(),
        hull_size=run.hull.h,
        threads=cfg.workers,
        chunk=cfg.chunk_size,
    )


def reports_to_json(reports: list[BenchReport]) -> str:
    return json.dumps([asdict(r) for r in reports], indent=2) + "\n"


def reports_to_csv(reports: list[BenchReport]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    w.writeheader()
    for r in reports:
        w.writerow(asdict(r))
    return buf.getvalue()
