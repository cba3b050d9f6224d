#!/usr/bin/env python3
"""Linear-scaling experiment: time the randomized solver on the path family
at a fixed depth budget and report successive runtime ratios.

Paths of these sizes need depth ceil(log2(n+1)) > 8, so every run ends in a
certified infeasibility verdict; the interesting question is that the cost
grows linearly with n.

Usage: python scripts/bench_paths.py [--depth 8] [--reps 30] [--exps 10 11 12 13]
"""

import argparse
import random
import sys
import time

sys.path.insert(0, "src")

from tdsolve.linear import LinearConfig, solve_randomized
from tdsolve.oracle import path


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--depth", type=int, default=8)
    ap.add_argument("--reps", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--exps", type=int, nargs="+", default=[10, 11, 12, 13])
    args = ap.parse_args()

    cfg = LinearConfig()
    prev = None
    print(f"{'n':>8} {'verdict':>10} {'total_s':>9} {'per_run_ms':>11} {'ratio':>6}")
    for exp in args.exps:
        n = 1 << exp
        g = path(n)
        rng = random.Random(args.seed)
        t0 = time.perf_counter()
        feasible = False
        for _ in range(args.reps):
            feasible = solve_randomized(g, args.depth, cfg, rng) is not None
        dt = time.perf_counter() - t0
        verdict = "feasible" if feasible else f"td>{args.depth}"
        ratio = "" if prev is None else f"{dt / prev:.2f}"
        print(f"{n:>8} {verdict:>10} {dt:>9.3f} {1000 * dt / args.reps:>11.2f} {ratio:>6}")
        prev = dt
    return 0


if __name__ == "__main__":
    sys.exit(main())
