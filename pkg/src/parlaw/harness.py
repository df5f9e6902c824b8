"""Seeded random instances and (N, k) sweeps over them."""

from __future__ import annotations

import hashlib
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegenerateGenerators, ExhaustedRetries, InvalidRange, ParlawError
from .exterior import EXACT, FLOAT, Mode, check_mode, format_scalar
from .parallelotope import DEFAULT_TOL, Generators, verify

MAX_RETRIES = 1000
N_MAX = 8
N_LIMIT = 12  # hard bound accepted by sweep()
DEFAULT_LOW, DEFAULT_HIGH = -9, 9


@dataclass(frozen=True)
class InstanceSpec:
    N: int
    n: int
    entry_low: int = DEFAULT_LOW
    entry_high: int = DEFAULT_HIGH
    seed: int = 0
    mode: Mode = EXACT
    denominator_max: int = 1  # >1 divides each coordinate by a draw from 1..denominator_max

    def __post_init__(self):
        check_mode(self.mode)
        if not 1 <= self.N <= self.n:
            raise InvalidRange(f"need 1 <= N <= n, got N={self.N}, n={self.n}")
        if self.entry_low > self.entry_high:
            raise InvalidRange("entry_low exceeds entry_high")
        if self.denominator_max < 1:
            raise InvalidRange("denominator_max must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise InvalidRange("seed must be an unsigned 64-bit integer")


def derive_seed(base_seed: int, N: int, trial: int) -> int:
    """Per-instance seed: first 8 bytes of BLAKE2b over ``"base:N:trial"``, big-endian."""
    digest = hashlib.blake2b(f"{base_seed}:{N}:{trial}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def random_generators(spec: InstanceSpec) -> Generators:
    """Generators with coordinates drawn uniformly, resampled until independent.

    The draw uses :class:`random.Random` seeded with ``spec.seed`` and is made in
    exact arithmetic, so exact and float instances from one spec share coordinates.
    """
    rng = random.Random(spec.seed)
    for _ in range(MAX_RETRIES):
        rows = [[rng.randint(spec.entry_low, spec.entry_high) for _ in range(spec.n)] for _ in range(spec.N)]
        if spec.denominator_max > 1:
            rows = [[Fraction(x, rng.randint(1, spec.denominator_max)) for x in r] for r in rows]
        try:
            return Generators.from_rows(rows, spec.mode)
        except DegenerateGenerators:
            continue
    raise ExhaustedRetries(f"no independent family after {MAX_RETRIES} draws for {spec}")


def trial_spec(base_seed: int, N: int, trial: int, mode: Mode = EXACT, denominator_max: int = 1) -> InstanceSpec:
    # ambient dimension cycles through N, N+1, N+2 across trials
    return InstanceSpec(N=N, n=N + trial % 3, seed=derive_seed(base_seed, N, trial), mode=mode,
                        denominator_max=denominator_max)


@dataclass
class CellResult:
    N: int
    k: int
    trials: int = 0
    max_abs_residual: object = 0
    expected: int = 0


@dataclass
class SweepSummary:
    cells: list
    trials_per_cell: int
    mode: str
    base_seed: int
    tolerance: float
    failures: list = field(default_factory=list)

    @property
    def specs(self) -> list:
        return [(c.N, c.k) for c in self.cells]

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "mode": self.mode,
            "base_seed": self.base_seed,
            "trials_per_cell": self.trials_per_cell,
            "tolerance": self.tolerance,
            "cells": [
                {"N": c.N, "k": c.k, "expected": c.expected, "trials": c.trials,
                 "max_abs_residual": format_scalar(c.max_abs_residual)}
                for c in self.cells
            ],
            "failures": self.failures,
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)


def _run_instance(args):
    base_seed, N, trial, mode, tol = args
    spec = trial_spec(base_seed, N, trial, mode)
    try:
        g = random_generators(spec)
        reports = [verify(g, k, tol) for k in range(1, N)]
    except ParlawError as exc:
        raise type(exc)(f"{exc} (N={N}, trial={trial}, seed={spec.seed})") from exc
    out = []
    for r in reports:
        failure = None
        if not r.passed:
            failure = {"seed": spec.seed, "N": N, "k": r.k, "trial": trial,
                       "residual": format_scalar(r.residual)}
            if mode == FLOAT:
                exact = verify(g.to_mode(EXACT), r.k)
                failure["exact_residual"] = format_scalar(exact.residual)
        out.append((r.k, r.residual, r.expected, failure))
    return N, trial, out


def sweep(N_range, trials: int, base_seed: int = 0, mode: Mode = EXACT,
          tol: float = DEFAULT_TOL, workers: int = 1) -> SweepSummary:
    """Verify every (N, k, trial) cell; results are assembled in cell order."""
    check_mode(mode)
    Ns = list(N_range)
    if not Ns or min(Ns) < 2 or max(Ns) > N_LIMIT:
        raise InvalidRange(f"N range must lie within 2..{N_LIMIT}")
    if trials < 1:
        raise InvalidRange("trials must be >= 1")
    jobs = [(base_seed, N, t, mode, tol) for N in Ns for t in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run_instance, jobs))
    else:
        results = [_run_instance(j) for j in jobs]

    zero = 0 if mode == EXACT else 0.0
    cells = {(N, k): CellResult(N, k, 0, zero, N - k + 1) for N in Ns for k in range(1, N)}
    failures = []
    for N, _trial, out in results:
        for k, residual, _expected, failure in out:
            c = cells[(N, k)]
            c.trials += 1
            c.max_abs_residual = max(c.max_abs_residual, residual)
            if failure:
                failures.append(failure)
    return SweepSummary(list(cells.values()), trials, mode, base_seed, tol, failures)
