"""Exact and float sweeps over N, written as JSON summaries.

    python scripts/run_sweep.py --n-max 8 --trials 20 --out results/
"""

import argparse
import time
from pathlib import Path

from parlaw.harness import N_MAX, sweep


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=N_MAX)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", type=Path, default=Path("results"))
    args = p.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    for mode in ("exact", "float"):
        t0 = time.perf_counter()
        s = sweep(range(args.n_min, args.n_max + 1), args.trials, args.seed, mode, workers=args.workers)
        path = args.out / f"sweep_{mode}_N{args.n_min}-{args.n_max}_t{args.trials}_s{args.seed}.json"
        path.write_text(s.to_json() + "\n")
        worst = max((float(c.max_abs_residual) / c.expected for c in s.cells), default=0.0)
        print(f"{mode:5s}  cells={len(s.cells):3d}  failures={len(s.failures)}  "
              f"worst_rel_residual={worst:.3e}  {time.perf_counter() - t0:.1f}s  -> {path}")


if __name__ == "__main__":
    main()
