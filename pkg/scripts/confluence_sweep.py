#!/usr/bin/env python3
"""Sweep the confluence verifier across the stock fixtures.

Prints one row per graph: overlap count, unresolved count, random-piling
divergences, wall time.  Slower and wider than the acceptance run when
asked (bounds and sample counts are flags).
"""

import argparse
import random
import time

from trickle import confluence as conf
from trickle.families import FIXTURES, fixture


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", default=[], help="fixture names (default: all)")
    ap.add_argument("--max-support", type=int, default=3)
    ap.add_argument("--max-exp", type=int, default=2)
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--strategies", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    names = args.names or sorted(FIXTURES)
    print(f"{'fixture':10} {'pairs':>10} {'unresolved':>10} {'samples':>8} "
          f"{'divergent':>9} {'seconds':>8}")
    bad = 0
    for name in names:
        g = fixture(name)
        t0 = time.time()
        pairs = conf.check_critical_pairs(g, args.max_support, args.max_exp)
        sampled = conf.check_strategy_independence(
            g, random.Random(args.seed), pilings=args.samples,
            strategies=args.strategies, max_support=args.max_support,
            max_exp=args.max_exp)
        dt = time.time() - t0
        print(f"{name:10} {pairs.pairs_checked:>10} {len(pairs.failures):>10} "
              f"{sampled.samples_checked:>8} {len(sampled.sample_failures):>9} "
              f"{dt:>8.1f}")
        if not (pairs.ok and sampled.ok):
            bad += 1
            print(pairs.describe())
            print(sampled.describe())
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
