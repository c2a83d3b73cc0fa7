"""Belief systems, the modified payoff, and the full-exploitation threshold."""

import numpy as np
import pytest

from middleman import (
    BeliefSystem,
    CobbDouglas,
    ContestationVerdict,
    Grid,
    HedonicGame,
    Linear,
    MultiplicativeIncome,
    StrategyProfile,
    ambiguity_equilibrium_check,
    best_fee_response,
    epsilon_nash_check,
    full_exploitation_verdict,
    full_extraction_fees,
    game_payoffs,
    loyalty_fees,
    middleman_payoff,
    modified_game,
    modified_payoff,
    optimistic_payoff,
    pessimistic_payoff,
)
from _support import random_benchmark_game, random_proper_beliefs, sigma_benchmark_game


def beliefs_at(gamma, lam=0.0, loyalty=(0.5, 0.5)):
    return BeliefSystem(lambda_=lam, gamma=gamma, loyalty1=loyalty[0], loyalty2=loyalty[1])


# ---------------------------------------------------------------------------
# belief systems
# ---------------------------------------------------------------------------


def test_properness_enforced():
    with pytest.raises(ValueError, match="properness"):
        BeliefSystem(lambda_=0.8, gamma=0.5, loyalty1=0.5, loyalty2=0.5)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(lambda_=-0.1, gamma=0.0, loyalty1=0.0, loyalty2=0.0),
        dict(lambda_=0.0, gamma=1.5, loyalty1=0.0, loyalty2=0.0),
        dict(lambda_=0.0, gamma=0.0, loyalty1=1.2, loyalty2=0.0),
    ],
)
def test_belief_fields_bounded(kwargs):
    with pytest.raises(ValueError):
        BeliefSystem(**kwargs)


def test_verdict_consistency_enforced():
    with pytest.raises(ValueError):
        ContestationVerdict(delta=1.0, rhs=0.5, full_exploitation=False)


# ---------------------------------------------------------------------------
# optimistic / pessimistic payoffs
# ---------------------------------------------------------------------------


def test_optimistic_payoff_full_usage_income():
    game = sigma_benchmark_game()
    assert optimistic_payoff(game, (1.0, 1.0)) == 2.0


def test_optimistic_payoff_gated_by_full_usage_caps():
    game = sigma_benchmark_game()
    assert optimistic_payoff(game, (1.1, 1.0)) == 0.0


def test_optimistic_payoff_additive_zero_fees():
    game = sigma_benchmark_game()
    assert optimistic_payoff(game, (0.0, 0.0)) == 0.0


def test_pessimistic_payoff_at_loyalty_point():
    game = sigma_benchmark_game()
    b = beliefs_at(0.5)
    assert pessimistic_payoff(game, b, (0.5, 0.5)) == pytest.approx(0.5)


def test_pessimistic_payoff_gated_by_loyalty_caps():
    game = sigma_benchmark_game()
    b = beliefs_at(0.5)
    assert pessimistic_payoff(game, b, (1.0, 1.0)) == 0.0


def test_no_loyalty_means_no_pessimistic_income():
    cd = CobbDouglas(1.0, 1.0)
    game = HedonicGame(cd, cd, MultiplicativeIncome(cd))
    b = beliefs_at(0.5, loyalty=(0.0, 0.0))
    for rho in ((0.1, 0.1), (1.0, 1.0)):
        assert pessimistic_payoff(game, b, rho) == 0.0


# ---------------------------------------------------------------------------
# modified payoff
# ---------------------------------------------------------------------------


def test_zero_ambiguity_reduces_to_standard_payoff():
    game = sigma_benchmark_game()
    b = beliefs_at(0.0, lam=0.0)
    rng = np.random.default_rng(12)
    for _ in range(200):
        profile = StrategyProfile(*rng.uniform(0, 1, 2), *rng.uniform(0, 1.5, 2))
        assert modified_payoff(game, b, profile) == middleman_payoff(game, profile)


def test_pure_optimism_ignores_actual_participation():
    game = sigma_benchmark_game()
    b = beliefs_at(0.0, lam=1.0)
    low = modified_payoff(game, b, StrategyProfile(0.3, 0.7, 0.5, 0.5))
    high = modified_payoff(game, b, StrategyProfile(1.0, 1.0, 0.5, 0.5))
    assert low == high == optimistic_payoff(game, (0.5, 0.5))


def test_modified_payoff_worked_value():
    # hand evaluation, independent of the library routines: with every
    # component (s1+s2)/2 and loyalty (0.5, 0.5), fees (0.5, 0.5) at full
    # participation give best = 1, worst = 0.5, plain = 1, so the mix at
    # (lambda, gamma) = (0.2, 0.3) is 0.2*1 + 0.3*0.5 + 0.5*1 = 0.85
    game = sigma_benchmark_game()
    b = BeliefSystem(lambda_=0.2, gamma=0.3, loyalty1=0.5, loyalty2=0.5)
    value = modified_payoff(game, b, StrategyProfile(1.0, 1.0, 0.5, 0.5))
    assert value == pytest.approx(0.85, abs=1e-12)

    best = (0.5 + 0.5) * 1.0
    worst = (0.5 + 0.5) * 0.5
    plain = (0.5 + 0.5) * 1.0
    assert value == pytest.approx(0.2 * best + 0.3 * worst + 0.5 * plain, abs=1e-12)


def test_modified_payoff_affine_in_belief_weights():
    game = sigma_benchmark_game()
    rng = np.random.default_rng(77)
    profile = StrategyProfile(1.0, 0.8, 0.4, 0.6)
    for _ in range(25):
        a = rng.uniform(0, 0.5, 2)
        c = rng.uniform(0, 0.5, 2)
        mid = (a + c) / 2
        vals = [
            modified_payoff(
                game,
                BeliefSystem(lambda_=w[0], gamma=w[1], loyalty1=0.5, loyalty2=0.5),
                profile,
            )
            for w in (a, mid, c)
        ]
        assert vals[1] == pytest.approx((vals[0] + vals[2]) / 2, abs=1e-12)


# ---------------------------------------------------------------------------
# loyalty fees
# ---------------------------------------------------------------------------


def test_loyalty_fees_product_benefits():
    cd = CobbDouglas(1.0, 1.0)
    game = HedonicGame(cd, cd, MultiplicativeIncome(cd))
    assert loyalty_fees(game, beliefs_at(0.5)) == (0.25, 0.25)


def test_loyalty_fees_at_full_loyalty_equal_full_extraction():
    game, _ = random_benchmark_game(np.random.default_rng(8))
    b = BeliefSystem(lambda_=0.0, gamma=0.0, loyalty1=1.0, loyalty2=1.0)
    assert loyalty_fees(game, b) == full_extraction_fees(game)


def test_loyalty_fees_vanish_without_loyalty():
    cd = CobbDouglas(1.0, 1.0)
    game = HedonicGame(cd, cd, MultiplicativeIncome(cd))
    assert loyalty_fees(game, beliefs_at(0.3, loyalty=(0.0, 0.0))) == (0.0, 0.0)


# ---------------------------------------------------------------------------
# threshold verdict
# ---------------------------------------------------------------------------


def test_threshold_verdict_moderate_pessimism():
    verdict = full_exploitation_verdict(sigma_benchmark_game(), beliefs_at(0.5))
    assert verdict.delta == pytest.approx(1.0)
    assert verdict.rhs == pytest.approx(0.5)
    assert verdict.full_exploitation


def test_threshold_verdict_high_pessimism():
    verdict = full_exploitation_verdict(sigma_benchmark_game(), beliefs_at(0.8))
    assert verdict.rhs == pytest.approx(2.0)
    assert not verdict.full_exploitation


def test_threshold_trivial_at_zero_pessimism():
    verdict = full_exploitation_verdict(sigma_benchmark_game(), beliefs_at(0.0))
    assert verdict.rhs == 0.0
    assert verdict.full_exploitation == (verdict.delta >= 0.0)


def test_threshold_preconditions():
    game = sigma_benchmark_game()
    with pytest.raises(ValueError):
        full_exploitation_verdict(game, beliefs_at(1.0))
    with pytest.raises(ValueError):
        full_exploitation_verdict(game, beliefs_at(0.5, loyalty=(1.0, 0.5)))


def test_threshold_ignores_optimism_weight():
    game, _ = random_benchmark_game(np.random.default_rng(21))
    for gamma in (0.2, 0.6, 0.9):
        verdicts = {
            full_exploitation_verdict(
                game,
                BeliefSystem(lambda_=lam, gamma=gamma, loyalty1=0.4, loyalty2=0.7),
            ).full_exploitation
            for lam in (0.0, 0.1, 1.0 - gamma)
        }
        assert len(verdicts) == 1


def test_threshold_failure_monotone_in_pessimism():
    rng = np.random.default_rng(1234)
    for _ in range(20):
        game, _ = random_benchmark_game(rng)
        loyalty = (rng.uniform(0.2, 0.95), rng.uniform(0.2, 0.95))
        gammas = np.linspace(0.0, 0.98, 40)
        results = [
            full_exploitation_verdict(
                game, BeliefSystem(0.0, float(g), *loyalty)
            ).full_exploitation
            for g in gammas
        ]
        first_false = next((i for i, r in enumerate(results) if not r), None)
        if first_false is not None:
            assert not any(results[first_false:])


def test_threshold_matches_modified_payoff_comparison():
    rng = np.random.default_rng(2718)
    for _ in range(200):
        game, _ = random_benchmark_game(rng)
        beliefs = random_proper_beliefs(rng)
        F = full_extraction_fees(game)
        phi = loyalty_fees(game, beliefs)
        diff = modified_payoff(game, beliefs, StrategyProfile(1.0, 1.0, *F)) - modified_payoff(
            game, beliefs, StrategyProfile(1.0, 1.0, *phi)
        )
        if abs(diff) > 1e-9:
            verdict = full_exploitation_verdict(game, beliefs)
            assert verdict.full_exploitation == (diff > 0)


# ---------------------------------------------------------------------------
# ambiguity equilibrium
# ---------------------------------------------------------------------------


def test_full_fees_supported_at_moderate_pessimism():
    game = sigma_benchmark_game()
    grid = Grid(20, full_extraction_fees(game))
    profile = StrategyProfile(1.0, 1.0, 1.0, 1.0)
    assert ambiguity_equilibrium_check(game, beliefs_at(0.5), profile, grid, 1e-9)


def test_high_pessimism_moves_equilibrium_to_loyalty_fees():
    game = sigma_benchmark_game()
    grid = Grid(20, full_extraction_fees(game))
    b = beliefs_at(0.8)
    assert not ambiguity_equilibrium_check(game, b, StrategyProfile(1.0, 1.0, 1.0, 1.0), grid)
    assert ambiguity_equilibrium_check(game, b, StrategyProfile(1.0, 1.0, 0.5, 0.5), grid)


def test_zero_ambiguity_equilibrium_matches_plain_nash():
    game = sigma_benchmark_game()
    b = beliefs_at(0.0)
    pay = game_payoffs(game)
    grid = Grid(20, full_extraction_fees(game))
    for profile in (
        StrategyProfile(1.0, 1.0, 1.0, 1.0),
        StrategyProfile(1.0, 1.0, 0.5, 0.5),
        StrategyProfile(0.7, 1.0, 0.2, 0.1),
    ):
        assert ambiguity_equilibrium_check(game, b, profile, grid) == epsilon_nash_check(
            pay, profile, grid
        )


def test_modified_game_leaves_user_payoffs_untouched():
    game = sigma_benchmark_game()
    transformed = modified_game(game, beliefs_at(0.6))
    plain = game_payoffs(game)
    profile = StrategyProfile(0.8, 0.9, 0.3, 0.4)
    assert transformed.payoff_user1(profile) == plain.payoff_user1(profile)
    assert transformed.payoff_user2(profile) == plain.payoff_user2(profile)


def test_best_fee_response_lands_on_a_threshold_candidate():
    game = sigma_benchmark_game()
    grid = Grid(20, full_extraction_fees(game))
    assert best_fee_response(game, beliefs_at(0.5), grid) == (1.0, 1.0)
    assert best_fee_response(game, beliefs_at(0.8), grid) == (0.5, 0.5)
