"""Solution concepts for the finite game: pure Nash equilibria and the
compromise set.

A profile is a pure Nash equilibrium when no player can strictly improve
their own payoff by switching to another of their strategies while everyone
else stays put (weak inequality: deviations that merely tie do not disqualify
a profile). The compromise set minimizes, over profiles, the largest shortfall
of any player's payoff from that player's best achievable payoff.

Ties are resolved with an absolute tolerance; strategies or profiles within
``tolerance`` of the optimum all count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .tensor import PayoffTensor, Profile, iterate_profiles

DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class NashResult:
    """Pure equilibria in normative profile order, with their payoff vectors."""

    equilibria: tuple[Profile, ...]
    payoffs: tuple[tuple[float, ...], ...]


@dataclass(frozen=True)
class CompromiseResult:
    """Ideal payoffs, per-profile shortfall residuals and their minimizers.

    ``residuals`` maps every profile (normative order) to
    ``max_i(ideal[i] - payoff_i)``; ``minimizers`` are all profiles whose
    residual is within tolerance of ``min_residual``.
    """

    ideal: tuple[float, ...]
    residuals: dict[Profile, float]
    minimizers: tuple[Profile, ...]
    min_residual: float


def _check_tolerance(tolerance: float) -> None:
    if tolerance < 0:
        raise ValueError(f"tolerance must be >= 0, got {tolerance!r}")


def best_response(
    tensor: PayoffTensor,
    player: int,
    others_fixed: Sequence[int | None],
    tolerance: float = DEFAULT_TOLERANCE,
) -> set[int]:
    """Indices of `player`'s payoff-maximizing strategies, ties included.

    ``others_fixed`` holds one strategy index per player; the entry at
    ``player``'s own position is ignored (may be None).
    """
    _check_tolerance(tolerance)
    index: list[object] = list(others_fixed)
    index[player] = slice(None)
    line = tensor.values[tuple(index) + (player,)]
    best = float(line.max())
    return {i for i, v in enumerate(line) if v >= best - tolerance}


def find_pure_nash(
    tensor: PayoffTensor, tolerance: float = DEFAULT_TOLERANCE
) -> NashResult:
    """Enumerate all pure Nash equilibria of the tensor game.

    A profile qualifies iff every player's strategy is within ``tolerance`` of
    that player's best response to the others' fixed strategies.
    """
    _check_tolerance(tolerance)
    stable = np.ones(tensor.shape, dtype=bool)
    for p in range(tensor.n_players):
        payoffs_p = tensor.values[..., p]
        stable &= payoffs_p >= payoffs_p.max(axis=p, keepdims=True) - tolerance
    equilibria = tuple(u for u in iterate_profiles(tensor.shape) if stable[u])
    return NashResult(equilibria, tuple(tensor.payoff_vector(u) for u in equilibria))


def ideal_vector(tensor: PayoffTensor) -> tuple[float, ...]:
    """Componentwise maximum payoff each player attains over all profiles."""
    flat = tensor.values.reshape(-1, tensor.n_players)
    return tuple(float(v) for v in flat.max(axis=0))


def find_compromise(
    tensor: PayoffTensor, tolerance: float = DEFAULT_TOLERANCE
) -> CompromiseResult:
    """Minimize the worst per-player shortfall from the ideal vector."""
    _check_tolerance(tolerance)
    ideal = ideal_vector(tensor)
    shortfall = (np.asarray(ideal) - tensor.values).max(axis=-1)
    residuals = {u: float(shortfall[u]) for u in iterate_profiles(tensor.shape)}
    min_residual = float(shortfall.min())
    minimizers = tuple(
        u for u, r in residuals.items() if r <= min_residual + tolerance
    )
    return CompromiseResult(ideal, residuals, minimizers, min_residual)
