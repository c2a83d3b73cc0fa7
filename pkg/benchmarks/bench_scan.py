#!/usr/bin/env python3
"""Benchmark the compiled scan kernels against the numpy fallback.

Times the raw scan primitives on prebuilt payoff tensors and the grid
oracles end to end, on two workloads:

* an equilibrium profile (worst case for early exit: every candidate must
  be scanned), and
* a refuted profile (a better deviation exists, so early exit pays off).

Usage: python benchmarks/bench_scan.py [--steps N] [--repeat K]
"""

import argparse
import time

import numpy as np

from middleman import (
    Grid,
    Linear,
    HedonicGame,
    MultiplicativeIncome,
    StrategyProfile,
    available_backends,
    full_extraction_fees,
    game_payoffs,
    pareto_check,
    use_backend,
    weak_dominance_check,
)
from middleman import _scan


def time_call(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_primitives(steps, repeat):
    n = steps + 1
    rng = np.random.default_rng(0)
    p1 = rng.uniform(0.0, 1.0, size=(n, n, n))
    p2 = rng.uniform(0.0, 1.0, size=(n, n, n))
    p3 = rng.uniform(0.0, 1.0, size=(n, n, n))
    high = float(p1.max() + p2.max() + p3.max())  # never dominated
    rows = []
    for label, targets in (("no dominator", (high, high, high)), ("dominator", (0.0, 0.0, 0.0))):
        for backend in available_backends():
            use_backend(backend)
            t, found = time_call(
                lambda: _scan.any_strict_dominator(p1, p2, p3, *targets, 1e-9), repeat
            )
            rows.append((f"strict-dominator scan, {label}", backend, t, found))
    return rows


def bench_oracles(steps, repeat):
    half = Linear(0.5, 0.5)
    game = HedonicGame(half, half, MultiplicativeIncome(half))
    pay = game_payoffs(game)
    F = full_extraction_fees(game)
    grid = Grid(steps, F)
    equilibrium = StrategyProfile(1.0, 1.0, *F)
    refuted = StrategyProfile(0.0, 0.0, 0.0, 0.0)
    rows = []
    for label, profile in (("equilibrium", equilibrium), ("refuted", refuted)):
        for backend in available_backends():
            use_backend(backend)
            t, verdict = time_call(lambda: pareto_check(pay, profile, grid), repeat)
            rows.append((f"pareto_check, {label} profile", backend, t, verdict))
    for backend in available_backends():
        use_backend(backend)
        t, verdict = time_call(lambda: weak_dominance_check(pay, 1, 1.0, grid), repeat)
        rows.append(("weak_dominance_check, dominant candidate", backend, t, verdict))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=int, default=60)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"backends: {', '.join(available_backends())}; steps={args.steps}")
    rows = bench_primitives(args.steps, args.repeat) + bench_oracles(args.steps, args.repeat)
    width = max(len(r[0]) for r in rows)
    for name, backend, t, result in rows:
        print(f"{name:<{width}}  {backend:<7} {t * 1e3:9.2f} ms  -> {result}")

    by_case = {}
    for name, backend, t, _ in rows:
        by_case.setdefault(name, {})[backend] = t
    print()
    for name, times in by_case.items():
        if len(times) == 2:
            ratio = times["python"] / times["cython"]
            print(f"{name:<{width}}  cython speedup x{ratio:.2f}")


if __name__ == "__main__":
    main()
