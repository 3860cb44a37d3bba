"""Serialization of solver results (JSON and aligned text)."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Literal

from .bisection import BracketMode, SolveOutcome
from .model import Status
from .simplex import SimplexResult
from .tolerances import DEFAULT_TOLERANCES, ToleranceSet

Method = Literal["bisect", "simplex", "both"]


@dataclass(frozen=True)
class SolverConfig:
    method: Method = "bisect"
    tolerances: ToleranceSet = field(default_factory=lambda: DEFAULT_TOLERANCES)
    bracket_mode: BracketMode = "doubling"
    output: Literal["human", "json"] = "human"
    trace_enabled: bool = False
    seed: int | None = None


@dataclass(frozen=True)
class Comparison:
    """Bisection and simplex run on the same problem."""

    bisect: SolveOutcome
    simplex: SimplexResult

    @property
    def value_gap(self) -> float | None:
        if self.bisect.status is Status.OPTIMAL and self.simplex.status is Status.OPTIMAL:
            return abs(self.bisect.value - self.simplex.value)
        return None

    def agrees(self, epsilon: float) -> bool:
        if self.bisect.status is not self.simplex.status:
            return False
        gap = self.value_gap
        return gap is None or gap <= epsilon + 1e-9 * abs(self.simplex.value)


def _reported(value: float, minimize: bool) -> float:
    return -value if minimize else value


def outcome_record(outcome: SolveOutcome | SimplexResult) -> dict:
    """Plain-data view of a result; keys depend only on method and status."""
    bisect = isinstance(outcome, SolveOutcome)
    record: dict = {
        "status": outcome.status.value,
        "method": "bisect" if bisect else "simplex",
        "iterations": outcome.iterations if bisect else outcome.pivots,
    }
    if outcome.status is Status.OPTIMAL:
        record["value"] = _reported(outcome.value, outcome.minimize)
        record["x"] = [float(v) for v in outcome.x_star]
        if bisect:
            record["bracket_width"] = outcome.bracket_width
            record["initial_bracket"] = list(outcome.initial_bracket)
    if bisect:
        record["trace"] = [[alpha, feasible] for alpha, feasible in outcome.trace]
    return record


def comparison_record(cmp: Comparison) -> dict:
    return {
        "bisect": outcome_record(cmp.bisect),
        "simplex": outcome_record(cmp.simplex),
        "value_gap": cmp.value_gap,
    }


def _human(record: dict, trace: bool, indent: str = "") -> list[str]:
    lines = []
    for key in ("method", "status", "value", "x", "iterations", "bracket_width"):
        if key not in record:
            continue
        value = record[key]
        if key == "x":
            text = " ".join(f"{v:.17g}" for v in value)
        elif isinstance(value, float):
            text = f"{value:.17g}"
        else:
            text = str(value)
        lines.append(f"{indent}{key:<14}{text}")
    if trace and record.get("trace"):
        lines.append(f"{indent}trace")
        for alpha, feasible in record["trace"]:
            lines.append(f"{indent}  {alpha:>26.17g}  {'hit' if feasible else 'miss'}")
    return lines


def write_outcome(outcome: SolveOutcome | SimplexResult | Comparison,
                  cfg: SolverConfig = SolverConfig()) -> str:
    if isinstance(outcome, Comparison):
        record = comparison_record(outcome)
    else:
        record = outcome_record(outcome)

    if cfg.output == "json":
        return json.dumps(record, sort_keys=True) + "\n"

    if isinstance(outcome, Comparison):
        lines = ["bisect"] + _human(record["bisect"], cfg.trace_enabled, "  ")
        lines += ["simplex"] + _human(record["simplex"], cfg.trace_enabled, "  ")
        gap = record["value_gap"]
        lines.append(f"{'value_gap':<14}{'n/a' if gap is None else f'{gap:.17g}'}")
    else:
        lines = _human(record, cfg.trace_enabled)
    return "\n".join(lines) + "\n"
