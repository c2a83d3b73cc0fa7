"""Parity between the compiled scan kernels and the numpy fallback."""

import numpy as np
import pytest

from middleman import (
    Grid,
    StrategyProfile,
    available_backends,
    current_backend,
    epsilon_nash_check,
    full_extraction_fees,
    game_payoffs,
    pareto_check,
    use_backend,
    weak_dominance_check,
)
from middleman import _scan
from _support import random_benchmark_game


@pytest.fixture
def restore_backend():
    original = current_backend()
    yield
    use_backend(original)


def test_default_backend_is_available():
    assert current_backend() in available_backends()


def test_unknown_backend_rejected():
    with pytest.raises(ValueError):
        use_backend("fortran")


def test_primitive_parity(restore_backend):
    rng = np.random.default_rng(606)
    cases = []
    for _ in range(300):
        values = rng.normal(size=rng.integers(1, 40))
        base = float(rng.normal())
        eps = float(rng.choice([0.0, 1e-9, 0.5]))
        cases.append(("improvement", values, base, eps))
    for _ in range(200):
        alts = rng.normal(size=(rng.integers(1, 12), rng.integers(1, 12)))
        cand = rng.normal(size=alts.shape[1])
        cases.append(("gap", alts, cand, float(rng.choice([0.0, 0.3]))))
    for _ in range(200):
        n = rng.integers(1, 60)
        p = rng.normal(size=(3, n))
        t = rng.normal(size=3)
        cases.append(("dominator", p, t, float(rng.choice([0.0, 1e-9, 0.2]))))

    results = {}
    for backend in available_backends():
        use_backend(backend)
        out = []
        for case in cases:
            if case[0] == "improvement":
                out.append(_scan.any_improvement(case[1], case[2], case[3]))
            elif case[0] == "gap":
                out.append(_scan.any_dominance_gap(case[1], case[2], case[3]))
            else:
                p, t, eps = case[1], case[2], case[3]
                out.append(
                    _scan.any_strict_dominator(p[0], p[1], p[2], t[0], t[1], t[2], eps)
                )
        results[backend] = out

    reference = results["python"]
    for backend, out in results.items():
        assert out == reference, f"{backend} disagrees with the numpy fallback"


def test_primitive_tie_semantics(restore_backend):
    # an improvement of exactly eps is a tie on every backend
    for backend in available_backends():
        use_backend(backend)
        assert not _scan.any_improvement(np.array([1.0]), 0.5, 0.5)
        assert _scan.any_improvement(np.array([1.0 + 1e-12]), 0.5, 0.5)
        assert not _scan.any_strict_dominator(
            np.array([1.0]), np.array([1.0]), np.array([1.0]), 1.0, 1.0, 1.0, 0.0
        )


def test_oracle_verdict_parity(restore_backend):
    rng = np.random.default_rng(9000)
    games = [random_benchmark_game(np.random.default_rng(seed)) for seed in (1, 2, 3)]
    verdicts = {}
    for backend in available_backends():
        use_backend(backend)
        out = []
        for game, s_lo in games:
            F = full_extraction_fees(game)
            pay = game_payoffs(game)
            grid = Grid(15, F, s_lo)
            equilibrium = StrategyProfile(1.0, 1.0, *F)
            undercut = StrategyProfile(1.0, 1.0, F[0] / 2, F[1] / 2)
            out += [
                epsilon_nash_check(pay, equilibrium, grid),
                epsilon_nash_check(pay, undercut, grid),
                weak_dominance_check(pay, 1, 1.0, grid),
                pareto_check(pay, equilibrium, grid),
                pareto_check(pay, undercut, grid),
            ]
        verdicts[backend] = out
    reference = verdicts["python"]
    for backend, out in verdicts.items():
        assert out == reference
