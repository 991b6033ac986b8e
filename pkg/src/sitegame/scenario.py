"""Game input model: region, natural objects, players and their candidate sites.

A scenario is pure data. Construction never validates; :func:`validate` reports
every broken invariant as a value instead of raising, so callers can show all
problems at once.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path


class ScenarioFormatError(ValueError):
    """A document could not be parsed into a Scenario (bad JSON or bad schema)."""


@dataclass(frozen=True)
class Point:
    x: float
    y: float


@dataclass(frozen=True)
class RegionConfig:
    """Region box, allowed distance band to natural objects, damage constant.

    ``pi_value`` is the constant appearing in the damage denominator. It is a
    scenario parameter rather than a hard-coded constant because instances may
    calibrate it (the bundled example uses 3).
    """

    x_max: float
    y_max: float
    rho_min: float
    rho_max: float
    pi_value: float = math.pi


@dataclass(frozen=True)
class NaturalObject:
    id: str
    position: Point


@dataclass(frozen=True)
class CandidateSite:
    id: str
    position: Point


@dataclass(frozen=True)
class PlayerSpec:
    """One player: emission volume, candidate sites, per-site coefficient rows.

    ``loss`` and ``damage_weight`` are indexed [site][object]: row k holds the
    coefficients in effect when the player builds at ``sites[k]``. A zero
    damage weight means the facility does not harm that object.
    """

    id: str
    emission: float
    sites: tuple[CandidateSite, ...]
    loss: tuple[tuple[float, ...], ...]
    damage_weight: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sites", tuple(self.sites))
        object.__setattr__(self, "loss", tuple(tuple(row) for row in self.loss))
        object.__setattr__(
            self, "damage_weight", tuple(tuple(row) for row in self.damage_weight)
        )


@dataclass(frozen=True)
class Scenario:
    region: RegionConfig
    objects: tuple[NaturalObject, ...]
    players: tuple[PlayerSpec, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "players", tuple(self.players))

    @property
    def n_players(self) -> int:
        return len(self.players)

    @property
    def n_objects(self) -> int:
        return len(self.objects)


@dataclass(frozen=True)
class Violation:
    """One broken invariant, pointing at the offending field."""

    path: str
    message: str

    def __str__(self) -> str:
        return f"{self.path}: {self.message}"


def _finite(x: float) -> bool:
    return isinstance(x, (int, float)) and math.isfinite(x)


def _check_point(point: Point, path: str, out: list[Violation]) -> None:
    if not _finite(point.x):
        out.append(Violation(f"{path}.x", f"must be a finite number, got {point.x!r}"))
    if not _finite(point.y):
        out.append(Violation(f"{path}.y", f"must be a finite number, got {point.y!r}"))


def _check_matrix(
    matrix: tuple[tuple[float, ...], ...],
    path: str,
    n_sites: int,
    n_objects: int,
    out: list[Violation],
) -> None:
    if len(matrix) != n_sites:
        out.append(
            Violation(path, f"expected {n_sites} rows (one per site), got {len(matrix)}")
        )
    for i, row in enumerate(matrix):
        if len(row) != n_objects:
            out.append(
                Violation(
                    f"{path}[{i}]",
                    f"expected {n_objects} entries (one per object), got {len(row)}",
                )
            )
        for j, entry in enumerate(row):
            if not _finite(entry) or entry < 0:
                out.append(
                    Violation(f"{path}[{i}][{j}]", f"must be a finite number >= 0, got {entry!r}")
                )


def validate(scenario: Scenario) -> list[Violation]:
    """Return every broken scenario invariant; an empty list means valid.

    Side-effect free and idempotent. Violations carry the path of the bad
    field, e.g. ``players[0].loss[2][1]``.
    """
    out: list[Violation] = []
    region = scenario.region

    if not _finite(region.x_max) or region.x_max <= 0:
        out.append(Violation("region.x_max", f"must be > 0, got {region.x_max!r}"))
    if not _finite(region.y_max) or region.y_max <= 0:
        out.append(Violation("region.y_max", f"must be > 0, got {region.y_max!r}"))
    if not _finite(region.rho_min) or region.rho_min <= 0:
        out.append(Violation("region.rho_min", f"must be > 0, got {region.rho_min!r}"))
    elif not _finite(region.rho_max) or region.rho_max < region.rho_min:
        out.append(
            Violation(
                "region.rho_max",
                f"must be >= rho_min ({region.rho_min!r}), got {region.rho_max!r}",
            )
        )
    if not _finite(region.pi_value) or region.pi_value <= 0:
        out.append(Violation("region.pi_value", f"must be > 0, got {region.pi_value!r}"))

    box_ok = (
        _finite(region.x_max) and region.x_max > 0 and _finite(region.y_max) and region.y_max > 0
    )

    if scenario.n_objects < 1:
        out.append(Violation("objects", "at least one natural object is required"))
    seen_ids: set[str] = set()
    for j, obj in enumerate(scenario.objects):
        path = f"objects[{j}]"
        if obj.id in seen_ids:
            out.append(Violation(path + ".id", f"duplicate object id {obj.id!r}"))
        seen_ids.add(obj.id)
        _check_point(obj.position, path + ".position", out)
        if box_ok and _finite(obj.position.x) and _finite(obj.position.y):
            if not (0 <= obj.position.x <= region.x_max):
                out.append(
                    Violation(
                        path + ".position.x",
                        f"outside region box [0, {region.x_max!r}], got {obj.position.x!r}",
                    )
                )
            if not (0 <= obj.position.y <= region.y_max):
                out.append(
                    Violation(
                        path + ".position.y",
                        f"outside region box [0, {region.y_max!r}], got {obj.position.y!r}",
                    )
                )

    if scenario.n_players < 1:
        out.append(Violation("players", "at least one player is required"))
    for i, player in enumerate(scenario.players):
        path = f"players[{i}]"
        if not _finite(player.emission) or player.emission < 0:
            out.append(
                Violation(
                    path + ".emission", f"must be a finite number >= 0, got {player.emission!r}"
                )
            )
        site_ids: set[str] = set()
        for k, site in enumerate(player.sites):
            if site.id in site_ids:
                out.append(
                    Violation(f"{path}.sites[{k}].id", f"duplicate site id {site.id!r}")
                )
            site_ids.add(site.id)
            _check_point(site.position, f"{path}.sites[{k}].position", out)
        _check_matrix(player.loss, path + ".loss", len(player.sites), scenario.n_objects, out)
        _check_matrix(
            player.damage_weight,
            path + ".damage_weight",
            len(player.sites),
            scenario.n_objects,
            out,
        )
    return out


# --- JSON document mapping -------------------------------------------------

def _expect_dict(value: object, path: str) -> dict:
    if not isinstance(value, dict):
        raise ScenarioFormatError(f"{path}: expected an object, got {type(value).__name__}")
    return value


def _expect_list(value: object, path: str) -> list:
    if not isinstance(value, list):
        raise ScenarioFormatError(f"{path}: expected a list, got {type(value).__name__}")
    return value


def _get(mapping: dict, key: str, path: str) -> object:
    if key not in mapping:
        raise ScenarioFormatError(f"{path}: missing required key {key!r}")
    return mapping[key]


def _number(value: object, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioFormatError(f"{path}: expected a number, got {type(value).__name__}")
    return float(value)


def _string(value: object, path: str) -> str:
    if not isinstance(value, str):
        raise ScenarioFormatError(f"{path}: expected a string, got {type(value).__name__}")
    return value


def _matrix(value: object, path: str) -> tuple[tuple[float, ...], ...]:
    rows = _expect_list(value, path)
    return tuple(
        tuple(
            _number(entry, f"{path}[{i}][{j}]")
            for j, entry in enumerate(_expect_list(row, f"{path}[{i}]"))
        )
        for i, row in enumerate(rows)
    )


def _labeled_point(value: object, path: str) -> tuple[str, Point]:
    entry = _expect_dict(value, path)
    return (
        _string(_get(entry, "id", path), f"{path}.id"),
        Point(_number(_get(entry, "x", path), f"{path}.x"), _number(_get(entry, "y", path), f"{path}.y")),
    )


def scenario_from_dict(doc: object) -> Scenario:
    """Build a Scenario from a parsed JSON document; unknown keys are ignored."""
    root = _expect_dict(doc, "document")

    region_doc = _expect_dict(_get(root, "region", "document"), "region")
    region = RegionConfig(
        x_max=_number(_get(region_doc, "x_max", "region"), "region.x_max"),
        y_max=_number(_get(region_doc, "y_max", "region"), "region.y_max"),
        rho_min=_number(_get(region_doc, "rho_min", "region"), "region.rho_min"),
        rho_max=_number(_get(region_doc, "rho_max", "region"), "region.rho_max"),
        pi_value=_number(region_doc.get("pi", math.pi), "region.pi"),
    )

    objects = []
    for j, entry in enumerate(_expect_list(_get(root, "objects", "document"), "objects")):
        object_id, position = _labeled_point(entry, f"objects[{j}]")
        objects.append(NaturalObject(object_id, position))

    players = []
    for i, entry in enumerate(_expect_list(_get(root, "players", "document"), "players")):
        path = f"players[{i}]"
        player_doc = _expect_dict(entry, path)
        sites = []
        for k, site_entry in enumerate(
            _expect_list(_get(player_doc, "sites", path), f"{path}.sites")
        ):
            site_id, position = _labeled_point(site_entry, f"{path}.sites[{k}]")
            sites.append(CandidateSite(site_id, position))
        players.append(
            PlayerSpec(
                id=_string(_get(player_doc, "id", path), f"{path}.id"),
                emission=_number(_get(player_doc, "emission", path), f"{path}.emission"),
                sites=tuple(sites),
                loss=_matrix(_get(player_doc, "loss", path), f"{path}.loss"),
                damage_weight=_matrix(
                    _get(player_doc, "damage_weight", path), f"{path}.damage_weight"
                ),
            )
        )

    return Scenario(region=region, objects=tuple(objects), players=tuple(players))


def scenario_to_dict(scenario: Scenario) -> dict:
    # Numbers are written as floats so that dump -> load -> dump is stable.
    return {
        "region": {
            "x_max": float(scenario.region.x_max),
            "y_max": float(scenario.region.y_max),
            "rho_min": float(scenario.region.rho_min),
            "rho_max": float(scenario.region.rho_max),
            "pi": float(scenario.region.pi_value),
        },
        "objects": [
            {"id": obj.id, "x": float(obj.position.x), "y": float(obj.position.y)}
            for obj in scenario.objects
        ],
        "players": [
            {
                "id": player.id,
                "emission": float(player.emission),
                "sites": [
                    {"id": site.id, "x": float(site.position.x), "y": float(site.position.y)}
                    for site in player.sites
                ],
                "loss": [[float(x) for x in row] for row in player.loss],
                "damage_weight": [[float(x) for x in row] for row in player.damage_weight],
            }
            for player in scenario.players
        ],
    }


def dumps_scenario(scenario: Scenario, *, indent: int = 2) -> str:
    return json.dumps(scenario_to_dict(scenario), indent=indent) + "\n"


def load_scenario(path: Path | str) -> Scenario:
    """Read and parse a scenario JSON file.

    Raises ScenarioFormatError naming the line/column for malformed JSON, or
    the offending key path for schema problems. I/O errors propagate as OSError.
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioFormatError(
            f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    return scenario_from_dict(doc)
