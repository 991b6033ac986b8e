"""Strategy-set constraints: region box membership and the object-distance band.

A location is feasible when it lies inside the region box and its distance to
every natural object falls within the closed band [rho_min, rho_max]. The
band can optionally also be enforced pairwise between distinct players' chosen
sites via :func:`check_profile_spacing`.

Feasibility here is advisory: the solvers operate on whatever payoff tensor
they are given and never consult these checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .payoff import distance
from .scenario import Point, Scenario

BELOW = "below"
ABOVE = "above"


@dataclass(frozen=True)
class BandViolation:
    object_id: str
    distance: float
    bound: str  # BELOW: closer than rho_min; ABOVE: farther than rho_max


@dataclass(frozen=True)
class FeasibilityReport:
    player_id: str | None
    site_id: str | None
    position: Point
    in_box: bool
    band_violations: tuple[BandViolation, ...]

    @property
    def feasible(self) -> bool:
        return self.in_box and not self.band_violations


@dataclass(frozen=True)
class PairSpacingViolation:
    """Two distinct players' chosen sites breach the distance band."""

    player_a: str
    site_a: str
    player_b: str
    site_b: str
    distance: float
    bound: str


def check_site(
    position: Point,
    scenario: Scenario,
    *,
    player_id: str | None = None,
    site_id: str | None = None,
) -> FeasibilityReport:
    """Check one location against the region box and the per-object band."""
    region = scenario.region
    in_box = 0 <= position.x <= region.x_max and 0 <= position.y <= region.y_max
    violations = []
    for obj in scenario.objects:
        rho = distance(position, obj.position)
        if rho < region.rho_min:
            violations.append(BandViolation(obj.id, rho, BELOW))
        elif rho > region.rho_max:
            violations.append(BandViolation(obj.id, rho, ABOVE))
    return FeasibilityReport(player_id, site_id, position, in_box, tuple(violations))


def check_scenario(scenario: Scenario) -> list[FeasibilityReport]:
    """Feasibility report for every candidate site, player-major site-minor."""
    return [
        check_site(site.position, scenario, player_id=player.id, site_id=site.id)
        for player in scenario.players
        for site in player.sites
    ]


def check_profile_spacing(
    scenario: Scenario, profile: Sequence[int]
) -> list[PairSpacingViolation]:
    """Apply the distance band pairwise between the sites chosen in a profile.

    Optional stricter reading of the spacing rule: besides keeping distance to
    natural objects, facilities of distinct players must also keep the band
    between each other. ``profile`` holds one site index per player.
    """
    region = scenario.region
    chosen = [
        (player, player.sites[profile[i]]) for i, player in enumerate(scenario.players)
    ]
    violations = []
    for a in range(len(chosen)):
        for b in range(a + 1, len(chosen)):
            player_a, site_a = chosen[a]
            player_b, site_b = chosen[b]
            rho = distance(site_a.position, site_b.position)
            if rho < region.rho_min:
                bound = BELOW
            elif rho > region.rho_max:
                bound = ABOVE
            else:
                continue
            violations.append(
                PairSpacingViolation(player_a.id, site_a.id, player_b.id, site_b.id, rho, bound)
            )
    return violations
