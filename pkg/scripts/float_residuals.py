"""Per-cell float residuals of the ratio check, relative to N-k+1, against exact mode.

Prints one row per (N, k): median and max relative residual over the trials and
whether the exact run on the same instances was identically zero.
"""

import argparse
import statistics

from parlaw.harness import random_generators, trial_spec
from parlaw.parallelotope import verify


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--trials", type=int, default=30)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--denominator-max", type=int, default=4)
    args = p.parse_args()

    print(f"{'N':>2} {'k':>2} {'median_rel':>11} {'max_rel':>11} exact_zero")
    for N in range(2, args.n_max + 1):
        gs = [random_generators(trial_spec(args.seed, N, t, denominator_max=args.denominator_max))
              for t in range(args.trials)]
        for k in range(1, N):
            rel = [verify(g.to_mode("float"), k).residual / (N - k + 1) for g in gs]
            exact_zero = all(verify(g, k).residual == 0 for g in gs)
            print(f"{N:>2} {k:>2} {statistics.median(rel):11.3e} {max(rel):11.3e} {exact_zero}")


if __name__ == "__main__":
    main()
