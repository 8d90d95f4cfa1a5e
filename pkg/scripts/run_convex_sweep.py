#!/usr/bin/env python3
"""Check the convex-position closed form: exact chi of the disjointness graph
of n points in convex position against f(n), for a range of n."""

import argparse
import sys
import time

from dchain import convex_sweep


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-min", type=int, default=4)
    parser.add_argument("--n-max", type=int, default=10)
    args = parser.parse_args()

    t0 = time.perf_counter()
    rows = convex_sweep(args.n_min, args.n_max)
    elapsed = time.perf_counter() - t0

    print("n,chi,expected,match")
    for r in rows:
        print(f"{r.n},{r.chi},{r.expected},{str(r.match).lower()}")
    bad = [r for r in rows if not r.match]
    print(f"# {len(rows)} values in {elapsed:.1f}s, {len(bad)} mismatches", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
