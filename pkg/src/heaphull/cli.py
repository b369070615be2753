"""Command line: ``heaphull {generate,hull,verify,bench}``.

Exit codes: 0 success, 1 verification mismatch, 2 bad input or usage.
"""
from __future__ import annotations

import argparse
import sys

from .bench import reports_to_csv, reports_to_json, run_bench
from .hull import cycle_mismatch, filter_rate, heaphull_run, oracle_hull
from .par_reduce import DEFAULT_CHUNK, ReduceConfig
from .pointgen import GenSpec, generate
from .pointio import FORMATS, read_points, write_points

DIST_ALIASES = {
    "normal": "normal",
    "square": "uniform_square",
    "disk": "uniform_disk",
    "circle": "circle",
    "uniform_square": "uniform_square",
    "uniform_disk": "uniform_disk",
}
VERIFY_MAX_N = 10**6


class CLIError(Exception):
    pass


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def _n_list(s: str) -> list[int]:
    try:
        return [_positive(t) for t in s.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad --n-list {s!r}") from None


def _cfg(args) -> ReduceConfig:
    return ReduceConfig(chunk_size=args.chunk, workers=args.threads)


def _gen_spec(args, n: int) -> GenSpec:
    try:
        return GenSpec(DIST_ALIASES[args.dist], n, args.seed, args.distort)
    except ValueError as e:
        raise CLIError(str(e)) from None


def _load(args):
    try:
        return read_points(args.inp, args.format)
    except (OSError, ValueError) as e:
        raise CLIError(str(e)) from None


def cmd_generate(args) -> int:
    spec = _gen_spec(args, args.n)
    write_points(generate(spec), args.out, args.format)
    return 0


def cmd_hull(args) -> int:
    P = _load(args)
    if args.algo == "oracle":
        hull, rate = oracle_hull(P), 0.0
    else:
        run = heaphull_run(P, _cfg(args))
        hull, rate = run.hull, filter_rate(run.labels)
    if args.out:
        write_points(list(hull.vertices), args.out, "text")
    print(f"h={hull.h} filter_rate={rate}")
    return 0


def cmd_verify(args) -> int:
    P = _load(args)
    if P.n > VERIFY_MAX_N:
        raise CLIError(f"{P.n} points exceeds the verify limit of {VERIFY_MAX_N}")
    got = heaphull_run(P, _cfg(args)).hull
    want = oracle_hull(P)
    diff = cycle_mismatch(got.vertices, want.vertices)
    if diff is not None:
        print(f"MISMATCH h={got.h} oracle_h={want.h}: {diff}")
        return 1
    print(f"OK h={got.h}")
    return 0


def cmd_bench(args) -> int:
    reports = [run_bench(_gen_spec(args, n), args.reps, _cfg(args)) for n in args.n_list]
    text = reports_to_json(reports) if args.report == "json" else reports_to_csv(reports)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _add_par(p):
    p.add_argument("--threads", type=_positive, default=1, help="worker count")
    p.add_argument("--chunk", type=_positive, default=DEFAULT_CHUNK, help="points per chunk")


def _add_dist(p):
    p.add_argument("--dist", required=True, choices=sorted(DIST_ALIASES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--distort", type=float, default=0.0, help="radial distortion %% (circle only)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heaphull", description="Octagon-filtered 2D convex hull.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a seeded synthetic point set")
    _add_dist(p)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("hull", help="compute the hull of a point file")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--algo", choices=("heaphull", "oracle"), default="heaphull")
    p.add_argument("--out", help="write hull vertices (text, CCW)")
    _add_par(p)
    p.set_defaults(func=cmd_hull)

    p = sub.add_parser("verify", help="check heaphull against the monotone-chain oracle")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--format", choices=FORMATS, default="text")
    _add_par(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="timing and filter-rate report")
    _add_dist(p)
    p.add_argument("--n-list", type=_n_list, required=True, help="comma-separated sizes")
    p.add_argument("--reps", type=_positive, default=100)
    p.add_argument("--report", choices=("json", "csv"), default="json")
    p.add_argument("--out")
    _add_par(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CLIError, OSError) as e:
        print(f"heaphull {args.command}: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
