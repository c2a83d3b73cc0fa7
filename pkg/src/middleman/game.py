"""Strategy profiles, evaluation grids, and generic three-player payoff bundles.

The game has two users choosing participation levels in [0, 1] and one
middleman choosing a nonnegative fee pair. Profile fields may hold numpy
arrays (broadcast together), which lets payoff functions be evaluated over
whole deviation grids in a single call.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

Value = Union[float, np.ndarray]


@dataclass(frozen=True)
class StrategyProfile:
    """A joint strategy: participation levels (s1, s2) and fee pair (rho1, rho2)."""

    s1: Value
    s2: Value
    rho1: Value
    rho2: Value

    def __post_init__(self):
        for name in ("s1", "s2"):
            v = np.asarray(getattr(self, name))
            if not np.all((v >= 0.0) & (v <= 1.0)):
                raise ValueError(f"{name} must lie in [0, 1]")
        for name in ("rho1", "rho2"):
            if not np.all(np.asarray(getattr(self, name)) >= 0.0):
                raise ValueError(f"{name} must be nonnegative")

    @property
    def rho(self) -> tuple[Value, Value]:
        return (self.rho1, self.rho2)


def _axis(lo: float, hi: float, steps: int) -> np.ndarray:
    # arange/steps keeps representable fractions (e.g. 10/20 = 0.5) exact,
    # and the endpoint is forced so caps evaluated at `hi` hold with equality.
    pts = lo + (hi - lo) * (np.arange(steps + 1) / steps)
    pts[-1] = hi
    return pts


@dataclass(frozen=True)
class Grid:
    """Deviation lattice with ``steps`` subdivisions per axis.

    Participation axes span [s_lo, 1] (s_lo defaults to 0, recovering the
    plain {k/steps} lattice); the fee axis of player i spans
    [0, fee_bounds[i-1]]. A nonzero ``s_lo`` restricts the working box, which
    is how families that are only strictly monotone away from the zero
    boundary (e.g. Cobb-Douglas) are handled.
    """

    steps: int
    fee_bounds: tuple[float, float] = (1.0, 1.0)
    s_lo: float = 0.0

    def __post_init__(self):
        if isinstance(self.steps, bool) or not isinstance(self.steps, (int, np.integer)):
            raise TypeError("steps must be an integer")
        if self.steps < 2:
            raise ValueError("steps must be at least 2")
        bounds = tuple(float(b) for b in self.fee_bounds)
        if len(bounds) != 2:
            raise ValueError("fee_bounds must be a pair")
        if any(b < 0.0 for b in bounds):
            raise ValueError("fee_bounds must be nonnegative")
        object.__setattr__(self, "fee_bounds", bounds)
        if not 0.0 <= self.s_lo < 1.0:
            raise ValueError("s_lo must lie in [0, 1)")

    def participation_axis(self) -> np.ndarray:
        return _axis(self.s_lo, 1.0, self.steps)

    def fee_axis(self, player: int) -> np.ndarray:
        if player not in (1, 2):
            raise ValueError("player must be 1 or 2")
        return _axis(0.0, self.fee_bounds[player - 1], self.steps)

    def with_fee_bounds(self, fee_bounds: tuple[float, float]) -> "Grid":
        return Grid(self.steps, fee_bounds, self.s_lo)


@dataclass(frozen=True)
class GamePayoffs:
    """Payoff functions of the two users and the middleman.

    Each callable maps a :class:`StrategyProfile` to a real value and must
    broadcast over array-valued profile fields.
    """

    payoff_user1: Callable[[StrategyProfile], Value]
    payoff_user2: Callable[[StrategyProfile], Value]
    payoff_middleman: Callable[[StrategyProfile], Value]

    def payoffs(self, profile: StrategyProfile) -> tuple[float, float, float]:
        """All three payoffs at a scalar profile."""
        return (
            float(self.payoff_user1(profile)),
            float(self.payoff_user2(profile)),
            float(self.payoff_middleman(profile)),
        )
