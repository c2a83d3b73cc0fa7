"""Activity-level specialisation: the multiplicative-income exploitation
condition, its normalised (gamma, sigma) benchmark, the boundary curve, and
the region sampler behind the contestation map.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ambiguity import BeliefSystem, loyalty_fees
from .game import Grid
from .hedonic import BenefitSpec, HedonicGame, MultiplicativeIncome, benefit_weakly_increasing


class PessimisticIncomeZeroError(ZeroDivisionError):
    """The ratio form of the exploitation condition divides by a zero
    pessimistic income; the difference form decides (full exploitation holds
    trivially because the retained income is zero)."""


def activity_weakly_increasing(g: BenefitSpec, grid: Grid) -> bool:
    """True iff the activity measure is nondecreasing per coordinate on the lattice."""
    return benefit_weakly_increasing(g, grid)


def activity_full_exploitation_condition(game: HedonicGame, beliefs: BeliefSystem) -> bool:
    """Ratio form of the exploitation threshold for multiplicative income.

    Compares the relative usage drop, scaled by the activity ratio, against
    gamma / (1 - gamma). Raises :class:`PessimisticIncomeZeroError` when the
    loyalty-point fees or activity vanish, where the ratio form is undefined.
    """
    if not isinstance(game.income, MultiplicativeIncome):
        raise TypeError("ratio condition requires the multiplicative income family")
    if beliefs.gamma >= 1.0:
        raise ValueError("ratio condition requires gamma < 1")
    if beliefs.loyalty1 >= 1.0 or beliefs.loyalty2 >= 1.0:
        raise ValueError("ratio condition requires loyalty levels < 1")

    f_hat = float(game.f1(1.0, 1.0)) + float(game.f2(1.0, 1.0))
    phi = loyalty_fees(game, beliefs)
    phi_hat = phi[0] + phi[1]
    g = game.income.activity
    g_full = float(g(1.0, 1.0))
    g_loyal = float(g(beliefs.loyalty1, beliefs.loyalty2))
    if phi_hat == 0.0 or g_loyal == 0.0:
        raise PessimisticIncomeZeroError(
            "pessimistic income is zero; full exploitation holds trivially"
        )
    lhs = (f_hat / phi_hat - 1.0) * (g_full / g_loyal)
    return bool(lhs >= beliefs.gamma / (1.0 - beliefs.gamma))


@dataclass(frozen=True)
class BenchmarkPoint:
    """A (gamma, sigma) pair: degree of pessimism and residual activity level."""

    gamma: float
    sigma: float

    def __post_init__(self):
        if not 0.0 <= self.gamma <= 1.0:
            raise ValueError("gamma must lie in [0, 1]")
        if not 0.0 <= self.sigma <= 1.0:
            raise ValueError("sigma must lie in [0, 1]")


@dataclass(frozen=True)
class RegionSample:
    point: BenchmarkPoint
    full_exploitation: bool

    @property
    def outside_threshold_domain(self) -> bool:
        """Endpoint samples (gamma = 1 or sigma = 1) fall outside the
        hypotheses of the threshold test; their verdicts read the benchmark
        inequality formally."""
        return self.point.gamma == 1.0 or self.point.sigma == 1.0


def benchmark_full_exploitation_condition(point: BenchmarkPoint) -> bool:
    """Normalised benchmark inequality: (1 - gamma)(1 - sigma) >= gamma * sigma**2."""
    g, s = point.gamma, point.sigma
    return bool((1.0 - g) * (1.0 - s) >= g * s * s)


def boundary_curve(sigma: float) -> float:
    """The pessimism threshold gamma*(sigma) where the benchmark inequality binds.

    Full exploitation holds iff gamma <= gamma*(sigma). The closed form
    (1 - sigma) / (1 - sigma + sigma**2) follows from solving the equality
    case; the denominator stays >= 3/4 on [0, 1].
    """
    if not 0.0 <= sigma <= 1.0:
        raise ValueError("sigma must lie in [0, 1]")
    return (1.0 - sigma) / ((1.0 - sigma) + sigma * sigma)


def region_sample(resolution: int) -> list[RegionSample]:
    """Benchmark verdicts on the (resolution+1)^2 lattice over [0, 1]^2.

    Ordering is row-major: gamma varies in the outer loop, sigma in the
    inner. Endpoints gamma = 1 and sigma = 1 are included; see
    :attr:`RegionSample.outside_threshold_domain`.
    """
    if isinstance(resolution, bool) or not isinstance(resolution, (int, np.integer)):
        raise TypeError("resolution must be an integer")
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    axis = np.arange(resolution + 1) / resolution
    samples = []
    for gamma in axis:
        for sigma in axis:
            point = BenchmarkPoint(float(gamma), float(sigma))
            samples.append(
                RegionSample(point, benchmark_full_exploitation_condition(point))
            )
    return samples
