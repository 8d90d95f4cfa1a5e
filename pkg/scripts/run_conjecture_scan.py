#!/usr/bin/env python3
"""Randomized hunt for a point set whose disjointness graph needs fewer than
f(n) colors. No such set is expected; finding one would be news."""

import argparse
import sys
import time

from dchain import conjecture_scan


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-min", type=int, default=4)
    parser.add_argument("--n-max", type=int, default=8)
    parser.add_argument("--trials", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out-dir", default=".", help="where counterexamples get archived")
    args = parser.parse_args()

    found = False
    for n in range(args.n_min, args.n_max + 1):
        t0 = time.perf_counter()
        rep = conjecture_scan(n, args.trials, args.seed, out_dir=args.out_dir)
        elapsed = time.perf_counter() - t0
        print(f"n={n}: min chi {rep.min_chi} vs f(n)={rep.f_value}, "
              f"forced {rep.forced_chis}, {rep.resamples} resamples, {elapsed:.1f}s")
        if rep.counterexample_paths:
            found = True
            print(f"  COUNTEREXAMPLE archived: {', '.join(rep.counterexample_paths)}")
        if rep.exhausted:
            print("  sampling exhausted before completing the scan", file=sys.stderr)
    return 1 if found else 0


if __name__ == "__main__":
    sys.exit(main())
