import math

import hypothesis.strategies as st
import numpy as np
import pytest

from sitegame import (
    CandidateSite,
    NaturalObject,
    PayoffTensor,
    PlayerSpec,
    Point,
    RegionConfig,
    Scenario,
    PROVENANCE_LOADED,
    fixture_scenario,
    fixture_tensor,
)


# Session scope is safe (values are immutable) and keeps hypothesis happy
# about fixtures inside @given tests.
@pytest.fixture(scope="session")
def scenario() -> Scenario:
    return fixture_scenario()


@pytest.fixture(scope="session")
def tensor() -> PayoffTensor:
    return fixture_tensor()


# Integer coordinate grids keep distance arithmetic exact, which lets the
# translation/scaling property tests assert equality instead of closeness.
_coord = st.integers(min_value=0, max_value=20)


@st.composite
def scenarios(draw, max_players: int = 3, max_sites: int = 3, max_objects: int = 4):
    """Structurally valid scenarios (validate() returns no violations)."""
    x_max = float(draw(st.integers(10, 30)))
    y_max = float(draw(st.integers(10, 30)))
    rho_min = draw(st.sampled_from([0.25, 0.5, 1.0]))
    rho_max = float(draw(st.integers(50, 200)))
    pi_value = draw(st.sampled_from([3.0, math.pi, 6.0]))

    m = draw(st.integers(1, max_objects))
    objects = tuple(
        NaturalObject(
            f"A{j + 1}",
            Point(float(draw(st.integers(0, int(x_max)))), float(draw(st.integers(0, int(y_max))))),
        )
        for j in range(m)
    )

    n = draw(st.integers(1, max_players))
    players = []
    for i in range(n):
        k = draw(st.integers(1, max_sites))
        sites = tuple(
            CandidateSite(
                f"P{i + 1}S{s + 1}",
                Point(
                    float(draw(st.integers(0, int(x_max)))),
                    float(draw(st.integers(0, int(y_max)))),
                ),
            )
            for s in range(k)
        )
        loss = tuple(
            tuple(float(draw(st.integers(0, 20))) for _ in range(m)) for _ in range(k)
        )
        damage_weight = tuple(
            tuple(draw(st.sampled_from([0.0, 0.5, 1.0, 1.5, 2.75])) for _ in range(m))
            for _ in range(k)
        )
        players.append(
            PlayerSpec(
                id=f"P{i + 1}",
                emission=float(draw(st.integers(0, 80))),
                sites=sites,
                loss=loss,
                damage_weight=damage_weight,
            )
        )
    return Scenario(
        region=RegionConfig(x_max, y_max, rho_min, rho_max, pi_value),
        objects=objects,
        players=tuple(players),
    )


@st.composite
def tensors(draw, max_players: int = 4, max_strategies: int = 4):
    """Random dense payoff tensors with uniform payoffs in [-10, 10]."""
    n = draw(st.integers(1, max_players))
    shape = tuple(draw(st.integers(1, max_strategies)) for _ in range(n))
    seed = draw(st.integers(0, 2**32 - 1))
    values = np.random.default_rng(seed).uniform(-10.0, 10.0, size=shape + (n,))
    return PayoffTensor(
        shape=shape,
        players=tuple(f"P{i + 1}" for i in range(n)),
        strategy_labels=tuple(tuple(f"S{j + 1}" for j in range(s)) for s in shape),
        values=values,
        provenance=PROVENANCE_LOADED,
    )


def random_tensor(rng: np.random.Generator, max_players: int = 4, max_strategies: int = 4) -> PayoffTensor:
    """Seeded-RNG tensor generator for bulk oracle-equivalence runs."""
    n = int(rng.integers(1, max_players + 1))
    shape = tuple(int(rng.integers(1, max_strategies + 1)) for _ in range(n))
    values = rng.uniform(-10.0, 10.0, size=shape + (n,))
    return PayoffTensor(
        shape=shape,
        players=tuple(f"P{i + 1}" for i in range(n)),
        strategy_labels=tuple(tuple(f"S{j + 1}" for j in range(s)) for s in shape),
        values=values,
        provenance=PROVENANCE_LOADED,
    )
