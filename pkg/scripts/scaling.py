"""Filtering-stage wall time against worker count and chunk size.

    python3 scripts/scaling.py --n 10000000 --workers 1,2,4,8 --chunks 32,1024
"""
import argparse
import os
import time

from heaphull.filtering import run_filter
from heaphull.par_reduce import ReduceConfig, ReduceEngine
from heaphull.pointgen import GenSpec, generate


def best_of(P, cfg, reps):
    best = float("inf")
    with ReduceEngine(cfg) as eng:
        for _ in range(reps):
            t0 = time.perf_counter()
            run_filter(P, eng)
            best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n", type=int, default=10**7)
    ap.add_argument("--dist", default="normal")
    ap.add_argument("--workers", default="1,2,4,8")
    ap.add_argument("--chunks", default="32,1024")
    ap.add_argument("--reps", type=int, default=3)
    args = ap.parse_args()

    P = generate(GenSpec(args.dist, args.n, 0))
    print(f"# {args.dist} n={args.n}, os.cpu_count()={os.cpu_count()}")
    print(f"{'chunk':>8}{'workers':>9}{'filter_ms':>12}{'speedup':>9}")
    for chunk in (int(c) for c in args.chunks.split(",")):
        base = None
        for w in (int(x) for x in args.workers.split(",")):
            t = best_of(P, ReduceConfig(chunk, w), args.reps)
            base = base or t
            print(f"{chunk:>8}{w:>9}{t * 1e3:>12.1f}{base / t:>9.2f}", flush=True)


if __name__ == "__main__":
    main()
