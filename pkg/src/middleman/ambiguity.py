"""Neo-additive belief systems and the contested middleman's modified payoff.

The middleman mixes an optimistic payoff (full participation, weight
``lambda_``), a pessimistic payoff (participation reduced to the loyalty
levels, weight ``gamma``), and the standard payoff (residual weight
``1 - lambda_ - gamma``). Users are never subject to ambiguity: their
payoffs stay the plain fee-capped benefits, so an ambiguity equilibrium is
an ordinary Nash profile of the transformed game.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .game import GamePayoffs, Grid, StrategyProfile, Value
from .hedonic import HedonicGame, full_extraction_fees, game_payoffs, middleman_payoff
from .oracles import epsilon_nash_check


@dataclass(frozen=True)
class BeliefSystem:
    """Degrees of optimism/pessimism plus the expected loyalty participation.

    Proper belief systems satisfy lambda_ + gamma <= 1; the remainder is the
    weight on the undisturbed game.
    """

    lambda_: float
    gamma: float
    loyalty1: float
    loyalty2: float

    def __post_init__(self):
        for name in ("lambda_", "gamma", "loyalty1", "loyalty2"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1]")
        if self.lambda_ + self.gamma > 1.0:
            raise ValueError(
                "properness violated: lambda_ + gamma = "
                f"{self.lambda_ + self.gamma:g} exceeds 1"
            )

    @property
    def loyalty(self) -> tuple[float, float]:
        return (self.loyalty1, self.loyalty2)


@dataclass(frozen=True)
class ContestationVerdict:
    """Outcome of the full-exploitation threshold test.

    ``delta`` is the income differential between charging the full-extraction
    fees and the loyalty fees at full participation; ``rhs`` is the
    pessimism-weighted income retained under contestation. Full exploitation
    holds exactly when delta >= rhs.
    """

    delta: float
    rhs: float
    full_exploitation: bool

    def __post_init__(self):
        if self.full_exploitation != (self.delta >= self.rhs):
            raise ValueError("inconsistent verdict: full_exploitation must equal delta >= rhs")


def loyalty_fees(game: HedonicGame, beliefs: BeliefSystem) -> tuple[float, float]:
    """Fee pair extracting the entire benefit at the loyalty participation levels."""
    l1, l2 = beliefs.loyalty
    return (float(game.f1(l1, l2)), float(game.f2(l1, l2)))


def optimistic_payoff(game: HedonicGame, rho: tuple[Value, Value]) -> Value:
    """Income at full participation, provided both fees stay affordable there."""
    rho1, rho2 = rho
    cap1 = game.f1(1.0, 1.0)
    cap2 = game.f2(1.0, 1.0)
    income = game.income(rho1, rho2, 1.0, 1.0)
    ok = (np.asarray(rho1) <= cap1) & (np.asarray(rho2) <= cap2)
    out = np.where(ok, income, 0.0)
    return float(out) if np.ndim(out) == 0 else out


def pessimistic_payoff(
    game: HedonicGame, beliefs: BeliefSystem, rho: tuple[Value, Value]
) -> Value:
    """Income at the loyalty participation levels, gated by the reduced fee caps."""
    rho1, rho2 = rho
    l1, l2 = beliefs.loyalty
    cap1 = game.f1(l1, l2)
    cap2 = game.f2(l1, l2)
    income = game.income(rho1, rho2, l1, l2)
    ok = (np.asarray(rho1) <= cap1) & (np.asarray(rho2) <= cap2)
    out = np.where(ok, income, 0.0)
    return float(out) if np.ndim(out) == 0 else out


def modified_payoff(
    game: HedonicGame, beliefs: BeliefSystem, profile: StrategyProfile
) -> Value:
    """Belief-weighted middleman payoff; reduces to the standard payoff at zero ambiguity."""
    best = optimistic_payoff(game, profile.rho)
    worst = pessimistic_payoff(game, beliefs, profile.rho)
    plain = middleman_payoff(game, profile)
    lam, gam = beliefs.lambda_, beliefs.gamma
    out = lam * np.asarray(best) + gam * np.asarray(worst) + (1.0 - lam - gam) * np.asarray(plain)
    return float(out) if np.ndim(out) == 0 else out


def modified_game(game: HedonicGame, beliefs: BeliefSystem) -> GamePayoffs:
    """Transformed game: users keep their plain payoffs, the middleman is modified."""
    plain = game_payoffs(game)
    return GamePayoffs(
        payoff_user1=plain.payoff_user1,
        payoff_user2=plain.payoff_user2,
        payoff_middleman=lambda p: modified_payoff(game, beliefs, p),
    )


def ambiguity_equilibrium_check(
    game: HedonicGame,
    beliefs: BeliefSystem,
    profile: StrategyProfile,
    grid: Grid,
    eps: float = 1e-9,
) -> bool:
    """Nash check of the transformed game over the full deviation grid."""
    return epsilon_nash_check(modified_game(game, beliefs), profile, grid, eps)


def best_fee_response(
    game: HedonicGame,
    beliefs: BeliefSystem,
    grid: Grid,
    s1: float = 1.0,
    s2: float = 1.0,
) -> tuple[float, float]:
    """Grid argmax of the modified payoff at fixed participation.

    The threshold test only ever compares the full-extraction and loyalty fee
    pairs; this scan surfaces any third fee pair beating both (ties resolve to
    the first maximiser in row-major fee order).
    """
    r1 = grid.fee_axis(1)
    r2 = grid.fee_axis(2)
    vals = np.asarray(
        modified_payoff(game, beliefs, StrategyProfile(s1, s2, r1[:, None], r2[None, :]))
    )
    i, j = divmod(int(np.argmax(vals)), r2.size)
    return (float(r1[i]), float(r2[j]))


def full_exploitation_verdict(game: HedonicGame, beliefs: BeliefSystem) -> ContestationVerdict:
    """Decide whether the contested middleman still charges the full-extraction fees.

    Compares the income differential ``delta`` against the pessimism-weighted
    income at the loyalty point; equality counts as full exploitation. Valid
    for gamma < 1 and loyalty levels < 1, with benefits strictly increasing
    and income weakly increasing on the working grid (the caller's
    responsibility, checkable via the monotonicity helpers).
    """
    if beliefs.gamma >= 1.0:
        raise ValueError("threshold test requires gamma < 1")
    if beliefs.loyalty1 >= 1.0 or beliefs.loyalty2 >= 1.0:
        raise ValueError("threshold test requires loyalty levels < 1")
    F = full_extraction_fees(game)
    phi = loyalty_fees(game, beliefs)
    l1, l2 = beliefs.loyalty
    delta = float(game.income(F[0], F[1], 1.0, 1.0)) - float(
        game.income(phi[0], phi[1], 1.0, 1.0)
    )
    rhs = beliefs.gamma / (1.0 - beliefs.gamma) * float(game.income(phi[0], phi[1], l1, l2))
    return ContestationVerdict(delta=delta, rhs=rhs, full_exploitation=delta >= rhs)
