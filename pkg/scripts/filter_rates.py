"""Mean filter rate and hull size per distribution and size.

    python3 scripts/filter_rates.py --sizes 10000,100000,1000000 --seeds 10
"""
import argparse
import statistics

from heaphull.filtering import run_filter
from heaphull.hull import filter_rate, heaphull
from heaphull.pointgen import GenSpec, generate

CASES = [("normal", 0.0), ("uniform_square", 0.0), ("uniform_disk", 0.0), ("circle", 0.0), ("circle", 2.0)]


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--sizes", default="10000,100000,1000000")
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--hull", action="store_true", help="also report the mean hull size (slower)")
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    print(f"{'distribution':<20}{'n':>10}{'filter_rate':>14}{'min':>10}{'max':>10}" + ("{:>10}".format("h") if args.hull else ""))
    for dist, d in CASES:
        for n in sizes:
            rates, hs = [], []
            for seed in range(args.seeds):
                P = generate(GenSpec(dist, n, seed, d))
                rates.append(filter_rate(run_filter(P).labels))
                if args.hull:
                    hs.append(heaphull(P).h)
            name = f"{dist}+{d:g}%" if d else dist
            row = f"{name:<20}{n:>10}{statistics.fmean(rates):>14.6f}{min(rates):>10.4f}{max(rates):>10.4f}"
            if args.hull:
                row += f"{statistics.fmean(hs):>10.1f}"
            print(row, flush=True)


if __name__ == "__main__":
    main()
