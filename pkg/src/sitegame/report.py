"""Solve report: runs the requested solvers over a tensor and renders the
results as JSON-ready data or human-readable text.

The JSON rendering keeps full float precision and fixed key order, so the
same inputs always produce byte-identical documents. Text mode rounds to six
significant digits.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import __version__
from .feasibility import FeasibilityReport, PairSpacingViolation
from .solvers import (
    DEFAULT_TOLERANCE,
    CompromiseResult,
    NashResult,
    find_compromise,
    find_pure_nash,
)
from .tensor import PayoffTensor, Profile

TOOL_NAME = "sitegame"


@dataclass(frozen=True)
class SolveReport:
    """Everything the CLI reports about one solve run."""

    tensor: PayoffTensor
    tolerance: float
    nash: NashResult | None
    compromise: CompromiseResult | None
    feasibility: tuple[FeasibilityReport, ...] | None = None
    pairwise_spacing: dict[Profile, tuple[PairSpacingViolation, ...]] | None = None

    def to_dict(self) -> dict:
        tensor = self.tensor
        doc: dict = {
            "tool": {"name": TOOL_NAME, "version": __version__},
            "tolerance": self.tolerance,
            "tensor": {
                "provenance": tensor.provenance,
                "shape": list(tensor.shape),
                "players": list(tensor.players),
                "strategy_labels": [list(axis) for axis in tensor.strategy_labels],
            },
        }
        if self.feasibility is not None:
            feasibility: dict = {
                "sites": [
                    {
                        "player": report.player_id,
                        "site": report.site_id,
                        "in_box": report.in_box,
                        "band_violations": [
                            {
                                "object": violation.object_id,
                                "distance": violation.distance,
                                "bound": violation.bound,
                            }
                            for violation in report.band_violations
                        ],
                        "feasible": report.feasible,
                    }
                    for report in self.feasibility
                ]
            }
            if self.pairwise_spacing is not None:
                feasibility["pairwise_spacing"] = [
                    {
                        "indices": list(profile),
                        "labels": list(tensor.labels_for(profile)),
                        "violations": [
                            {
                                "player_a": v.player_a,
                                "site_a": v.site_a,
                                "player_b": v.player_b,
                                "site_b": v.site_b,
                                "distance": v.distance,
                                "bound": v.bound,
                            }
                            for v in violations
                        ],
                    }
                    for profile, violations in self.pairwise_spacing.items()
                ]
            doc["feasibility"] = feasibility
        if self.nash is not None:
            doc["nash"] = {
                "count": len(self.nash.equilibria),
                "equilibria": [
                    self._profile_entry(profile) for profile in self.nash.equilibria
                ],
            }
        if self.compromise is not None:
            doc["compromise"] = {
                "ideal": list(self.compromise.ideal),
                "min_residual": self.compromise.min_residual,
                "count": len(self.compromise.minimizers),
                "minimizers": [
                    self._profile_entry(profile, residual=self.compromise.residuals[profile])
                    for profile in self.compromise.minimizers
                ],
            }
            doc["residuals"] = [
                {
                    "indices": list(profile),
                    "labels": list(tensor.labels_for(profile)),
                    "residual": residual,
                }
                for profile, residual in self.compromise.residuals.items()
            ]
        return doc

    def _profile_entry(self, profile: Profile, residual: float | None = None) -> dict:
        entry = {
            "indices": list(profile),
            "labels": list(self.tensor.labels_for(profile)),
            "payoffs": list(self.tensor.payoff_vector(profile)),
        }
        if residual is not None:
            entry["residual"] = residual
        return entry

    def to_text(self) -> str:
        tensor = self.tensor
        lines = [f"{TOOL_NAME} {__version__}"]
        shape = "x".join(str(s) for s in tensor.shape)
        lines.append(
            f"tensor {shape} ({tensor.provenance}); players: {', '.join(tensor.players)}"
        )
        lines.append(f"tolerance {_fmt(self.tolerance)}")
        if self.feasibility is not None:
            feasible = sum(1 for report in self.feasibility if report.feasible)
            lines.append(
                f"feasibility: {len(self.feasibility)} sites checked, {feasible} feasible"
            )
            for report in self.feasibility:
                if report.feasible:
                    continue
                problems = []
                if not report.in_box:
                    problems.append("outside region box")
                problems.extend(
                    f"{v.bound} band to {v.object_id} (distance {_fmt(v.distance)})"
                    for v in report.band_violations
                )
                lines.append(f"  {report.player_id}/{report.site_id}: {'; '.join(problems)}")
            if self.pairwise_spacing is not None:
                lines.append(
                    f"pairwise spacing violations: {len(self.pairwise_spacing)} profiles"
                )
                for profile, violations in self.pairwise_spacing.items():
                    descriptions = ", ".join(
                        f"{v.site_a}-{v.site_b} {v.bound} band (distance {_fmt(v.distance)})"
                        for v in violations
                    )
                    lines.append(f"  {_profile_text(tensor, profile)}: {descriptions}")
        if self.nash is not None:
            lines.append(f"nash equilibria ({len(self.nash.equilibria)}):")
            for profile, payoffs in zip(self.nash.equilibria, self.nash.payoffs):
                lines.append(
                    f"  {_profile_text(tensor, profile)}: payoffs {_vector_text(payoffs)}"
                )
        if self.compromise is not None:
            lines.append(f"ideal vector: {_vector_text(self.compromise.ideal)}")
            lines.append(
                f"compromise minimizers ({len(self.compromise.minimizers)}), "
                f"min residual {_fmt(self.compromise.min_residual)}:"
            )
            for profile in self.compromise.minimizers:
                payoffs = tensor.payoff_vector(profile)
                lines.append(
                    f"  {_profile_text(tensor, profile)}: payoffs {_vector_text(payoffs)}"
                )
            lines.append("residuals:")
            for profile, residual in self.compromise.residuals.items():
                lines.append(f"  {_profile_text(tensor, profile)}: {_fmt(residual)}")
        return "\n".join(lines)


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def _vector_text(values) -> str:
    return "(" + ", ".join(_fmt(v) for v in values) + ")"


def _profile_text(tensor: PayoffTensor, profile: Profile) -> str:
    labels = ", ".join(tensor.labels_for(profile))
    indices = ", ".join(str(i) for i in profile)
    return f"({labels}) = ({indices})"


def solve(
    tensor: PayoffTensor,
    *,
    nash: bool = True,
    compromise: bool = True,
    tolerance: float = DEFAULT_TOLERANCE,
    feasibility: tuple[FeasibilityReport, ...] | None = None,
    pairwise_spacing: dict[Profile, tuple[PairSpacingViolation, ...]] | None = None,
) -> SolveReport:
    """Run the requested solvers (both by default) and assemble a report."""
    return SolveReport(
        tensor=tensor,
        tolerance=tolerance,
        nash=find_pure_nash(tensor, tolerance) if nash else None,
        compromise=find_compromise(tensor, tolerance) if compromise else None,
        feasibility=feasibility,
        pairwise_spacing=pairwise_spacing,
    )
