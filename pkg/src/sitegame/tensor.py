"""Dense n-player payoff tensor over the Cartesian product of candidate sites.

The normative profile order used everywhere (file format, reports, solver
output) is lexicographic with the last player's index varying fastest, i.e.
numpy C order.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .payoff import payoff
from .scenario import Scenario

Profile = tuple[int, ...]

PROVENANCE_COMPUTED = "computed-from-equation"
PROVENANCE_LOADED = "loaded-from-file"


class TensorFormatError(ValueError):
    """A document could not be parsed into a PayoffTensor."""


@dataclass(frozen=True)
class PayoffTensor:
    """Payoff vectors for every strategy profile of a finite game.

    ``values`` has shape ``shape + (n_players,)``; ``values[profile][p]`` is
    player p's payoff at that profile. The array is frozen after construction
    so tensors can be shared across threads.
    """

    shape: tuple[int, ...]
    players: tuple[str, ...]
    strategy_labels: tuple[tuple[str, ...], ...]
    values: np.ndarray
    provenance: str

    def __post_init__(self) -> None:
        shape = tuple(int(s) for s in self.shape)
        players = tuple(self.players)
        labels = tuple(tuple(axis) for axis in self.strategy_labels)
        if len(shape) != len(players):
            raise ValueError(f"{len(players)} player labels for {len(shape)} axes")
        if any(s < 1 for s in shape):
            raise ValueError(f"every player needs at least one strategy, got shape {shape}")
        if len(labels) != len(shape) or any(len(axis) != s for axis, s in zip(labels, shape)):
            raise ValueError("strategy_labels must match shape")
        values = np.array(self.values, dtype=float)
        if values.shape != shape + (len(players),):
            raise ValueError(
                f"values shape {values.shape} does not match {shape + (len(players),)}"
            )
        if not np.all(np.isfinite(values)):
            raise ValueError("all payoff values must be finite")
        values.setflags(write=False)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "players", players)
        object.__setattr__(self, "strategy_labels", labels)
        object.__setattr__(self, "values", values)

    @property
    def n_players(self) -> int:
        return len(self.players)

    @property
    def n_profiles(self) -> int:
        return math.prod(self.shape)

    def payoff_vector(self, profile: Sequence[int]) -> tuple[float, ...]:
        return tuple(float(v) for v in self.values[tuple(profile)])

    def labels_for(self, profile: Sequence[int]) -> tuple[str, ...]:
        return tuple(self.strategy_labels[p][i] for p, i in enumerate(profile))


def iterate_profiles(shape: Iterable[int]) -> Iterator[Profile]:
    """All profiles of a shape in normative order (last index fastest)."""
    dims = tuple(int(s) for s in shape)
    if any(s < 1 for s in dims):
        raise ValueError(f"every player needs at least one strategy, got shape {dims}")
    return itertools.product(*(range(s) for s in dims))


def build_tensor(scenario: Scenario) -> PayoffTensor:
    """Evaluate the payoff formula at every candidate site and assemble the tensor.

    Each player's payoff depends only on their own site, so the formula is
    evaluated once per (player, site) and broadcast along the other players'
    axes. Raises ZeroDistanceError (naming player, site and object) if any
    candidate site sits on a natural object.
    """
    for player in scenario.players:
        if not player.sites:
            raise ValueError(f"player {player.id!r} has no candidate sites")
    shape = tuple(len(player.sites) for player in scenario.players)
    n = len(scenario.players)

    values = np.empty(shape + (n,), dtype=float)
    for p, player in enumerate(scenario.players):
        totals = np.array(
            [
                payoff(p, site.position, scenario, site_index=k).total
                for k, site in enumerate(player.sites)
            ]
        )
        broadcast_shape = [1] * n
        broadcast_shape[p] = shape[p]
        values[..., p] = totals.reshape(broadcast_shape)

    return PayoffTensor(
        shape=shape,
        players=tuple(player.id for player in scenario.players),
        strategy_labels=tuple(
            tuple(site.id for site in player.sites) for player in scenario.players
        ),
        values=values,
        provenance=PROVENANCE_COMPUTED,
    )


# --- JSON document mapping -------------------------------------------------

def tensor_to_dict(tensor: PayoffTensor) -> dict:
    """Tensor document; payoff rows listed in normative profile order."""
    return {
        "shape": list(tensor.shape),
        "players": list(tensor.players),
        "strategy_labels": [list(axis) for axis in tensor.strategy_labels],
        "payoffs": tensor.values.reshape(-1, tensor.n_players).tolist(),
    }


def tensor_from_dict(doc: object) -> PayoffTensor:
    """Parse a tensor document; provenance is always loaded-from-file.

    ``players`` and ``strategy_labels`` are optional and default to positional
    labels. Unknown keys are ignored.
    """
    if not isinstance(doc, dict):
        raise TensorFormatError(f"document: expected an object, got {type(doc).__name__}")
    if "shape" not in doc:
        raise TensorFormatError("document: missing required key 'shape'")
    if "payoffs" not in doc:
        raise TensorFormatError("document: missing required key 'payoffs'")

    shape_doc = doc["shape"]
    if not isinstance(shape_doc, list) or not shape_doc:
        raise TensorFormatError("shape: expected a non-empty list of integers")
    shape = []
    for i, entry in enumerate(shape_doc):
        if isinstance(entry, bool) or not isinstance(entry, int) or entry < 1:
            raise TensorFormatError(f"shape[{i}]: expected an integer >= 1, got {entry!r}")
        shape.append(entry)
    n = len(shape)
    n_profiles = math.prod(shape)

    players = doc.get("players", [f"P{i + 1}" for i in range(n)])
    if not isinstance(players, list) or not all(isinstance(p, str) for p in players):
        raise TensorFormatError("players: expected a list of strings")
    if len(players) != n:
        raise TensorFormatError(f"players: expected {n} labels, got {len(players)}")

    labels = doc.get(
        "strategy_labels", [[f"S{k + 1}" for k in range(s)] for s in shape]
    )
    if not isinstance(labels, list) or len(labels) != n:
        raise TensorFormatError(f"strategy_labels: expected {n} label lists")
    for p, axis in enumerate(labels):
        if not isinstance(axis, list) or not all(isinstance(x, str) for x in axis):
            raise TensorFormatError(f"strategy_labels[{p}]: expected a list of strings")
        if len(axis) != shape[p]:
            raise TensorFormatError(
                f"strategy_labels[{p}]: expected {shape[p]} labels, got {len(axis)}"
            )

    payoffs_doc = doc["payoffs"]
    if not isinstance(payoffs_doc, list):
        raise TensorFormatError("payoffs: expected a list of payoff vectors")
    if len(payoffs_doc) != n_profiles:
        raise TensorFormatError(
            f"payoffs: expected {n_profiles} rows (product of shape), got {len(payoffs_doc)}"
        )
    rows = []
    for r, row in enumerate(payoffs_doc):
        if not isinstance(row, list) or len(row) != n:
            raise TensorFormatError(f"payoffs[{r}]: expected a vector of {n} numbers")
        entries = []
        for p, entry in enumerate(row):
            if isinstance(entry, bool) or not isinstance(entry, (int, float)):
                raise TensorFormatError(f"payoffs[{r}][{p}]: expected a number, got {entry!r}")
            if not math.isfinite(entry):
                raise TensorFormatError(f"payoffs[{r}][{p}]: must be finite, got {entry!r}")
            entries.append(float(entry))
        rows.append(entries)

    values = np.array(rows, dtype=float).reshape(tuple(shape) + (n,))
    return PayoffTensor(
        shape=tuple(shape),
        players=tuple(players),
        strategy_labels=tuple(tuple(axis) for axis in labels),
        values=values,
        provenance=PROVENANCE_LOADED,
    )


def dumps_tensor(tensor: PayoffTensor, *, indent: int = 2) -> str:
    return json.dumps(tensor_to_dict(tensor), indent=indent) + "\n"


def load_tensor(path: Path | str) -> PayoffTensor:
    """Read and parse a tensor JSON file; see load_scenario for error style."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TensorFormatError(
            f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    return tensor_from_dict(doc)
