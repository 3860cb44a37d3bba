"""Maximize c.x by bisecting on the level of the objective hyperplane.

A bracket holds one level whose hyperplane meets the feasible set (with a
witness point on it) and one level whose hyperplane misses it. Each step
tests the midpoint and keeps the half that still separates the two cases,
so the bracket width halves every iteration.

Levels are kept on a power-of-two grid no coarser than ``epsilon``. With
the anchor and step on that grid, every midpoint is computed exactly and
the width sequence is an exact geometric series.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .errors import IterationLimitError
from .feasibility import certify_unbounded, check_level_feasible, find_feasible_point
from .model import LinearProgram, Status, evaluate_objective
from .tolerances import DEFAULT_TOLERANCES, ToleranceSet

BracketMode = Literal["doubling", "paper_halving"]

# the halving search starts this many doublings above the feasible anchor
PAPER_START_EXPONENT = 16


@dataclass(frozen=True, eq=False)
class Bracket:
    alpha_feasible: float
    witness: np.ndarray
    alpha_infeasible: float

    def __post_init__(self):
        if not self.alpha_feasible < self.alpha_infeasible:
            raise ValueError(
                f"bracket is inverted: {self.alpha_feasible!r} >= {self.alpha_infeasible!r}")

    @property
    def width(self) -> float:
        return self.alpha_infeasible - self.alpha_feasible

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.alpha_feasible + self.alpha_infeasible)


@dataclass(frozen=True, eq=False)
class SolveOutcome:
    """Result of :func:`solve`.

    ``trace`` lists every (level, feasible) oracle call of the bisection loop;
    ``bracket_trace`` lists the calls made while building the first bracket.
    Levels are in the internal maximization sense.
    """

    status: Status
    x_star: np.ndarray | None = None
    value: float | None = None
    bracket_width: float | None = None
    iterations: int = 0
    trace: list[tuple[float, bool]] = field(default_factory=list)
    initial_bracket: tuple[float, float] | None = None
    bracket_trace: list[tuple[float, bool]] = field(default_factory=list)
    minimize: bool = False


class _Oracle:
    """check_level_feasible with call recording."""

    def __init__(self, lp: LinearProgram, tol: ToleranceSet, trace: list | None):
        self.lp, self.tol, self.trace = lp, tol, trace

    def __call__(self, alpha: float):
        result = check_level_feasible(self.lp, alpha, self.tol)
        if self.trace is not None:
            self.trace.append((alpha, result.feasible))
        return result


def level_grid(epsilon: float) -> float:
    """Largest power of two not exceeding epsilon."""
    return 2.0 ** math.floor(math.log2(epsilon))


def initial_bracket(lp: LinearProgram, tol: ToleranceSet = DEFAULT_TOLERANCES,
                    mode: BracketMode = "doubling",
                    trace: list | None = None) -> Bracket | Status:
    """First feasible/infeasible level pair, or the verdict that none exists.

    Starts from a point of the feasible set and moves the hyperplane outward:
    ``doubling`` tests anchor + step, anchor + 2 step, ... until a level is
    missed; ``paper_halving`` starts far out and halves the offset toward the
    anchor until a level is hit.
    """
    start = find_feasible_point(lp, tol)
    if not start.feasible:
        return Status.INFEASIBLE
    if certify_unbounded(lp, tol):
        return Status.UNBOUNDED

    probe = _Oracle(lp, tol, trace)
    anchor, witness = evaluate_objective(lp, start.witness), start.witness

    grid = level_grid(tol.epsilon)
    snapped = math.ceil(anchor / grid) * grid
    if snapped != anchor:
        hit = probe(snapped)
        if not hit.feasible:
            # the optimum lies within one grid cell of the start point
            return Bracket(anchor, witness, snapped)
        anchor, witness = snapped, hit.witness

    step = max(1.0, abs(anchor))
    if mode == "doubling":
        return _double_outward(probe, anchor, witness, step, tol)
    if mode == "paper_halving":
        return _halve_inward(probe, anchor, witness, step, tol)
    raise ValueError(f"unknown bracket mode {mode!r}")


def _double_outward(probe, anchor, witness, step, tol, offset=None):
    lo = anchor
    offset = step if offset is None else offset
    for _ in range(tol.max_doublings):
        level = anchor + offset
        hit = probe(level)
        if not hit.feasible:
            return Bracket(lo, witness, level)
        lo, witness = level, hit.witness
        offset *= 2.0
    raise IterationLimitError(
        f"no infeasible level found after {tol.max_doublings} doublings "
        f"(last feasible level {lo!r}) although no improving ray exists")


def _halve_inward(probe, anchor, witness, step, tol):
    offset = step * 2.0 ** PAPER_START_EXPONENT
    hi = anchor + offset
    hit = probe(hi)
    if hit.feasible:
        # started below the optimum after all; fall back to moving outward
        return _double_outward(probe, anchor, witness, step, tol, offset)
    while hi - anchor > tol.epsilon:
        offset *= 0.5
        level = anchor + offset
        hit = probe(level)
        if hit.feasible:
            return Bracket(level, hit.witness, hi)
        hi = level
    return Bracket(anchor, witness, hi)


def bisect_step(lp: LinearProgram, br: Bracket, tol: ToleranceSet = DEFAULT_TOLERANCES,
                trace: list | None = None) -> Bracket:
    mid = br.midpoint
    hit = _Oracle(lp, tol, trace)(mid)
    if hit.feasible:
        return Bracket(mid, hit.witness, br.alpha_infeasible)
    return Bracket(br.alpha_feasible, br.witness, mid)


def solve(lp: LinearProgram, tol: ToleranceSet = DEFAULT_TOLERANCES,
          bracket_mode: BracketMode = "doubling") -> SolveOutcome:
    """Approximate max c.x to within ``tol.epsilon`` from below."""
    if not np.any(lp.c):
        start = find_feasible_point(lp, tol)
        if not start.feasible:
            return SolveOutcome(Status.INFEASIBLE, minimize=lp.minimize)
        return SolveOutcome(Status.OPTIMAL, start.witness, 0.0, 0.0,
                            initial_bracket=(0.0, 0.0), minimize=lp.minimize)

    bracket_trace: list = []
    br = initial_bracket(lp, tol, bracket_mode, trace=bracket_trace)
    if isinstance(br, Status):
        return SolveOutcome(br, bracket_trace=bracket_trace, minimize=lp.minimize)

    first = (br.alpha_feasible, br.alpha_infeasible)
    trace: list = []
    iterations = 0
    while br.width > tol.epsilon:
        if iterations >= tol.max_bisections:
            raise IterationLimitError(
                f"bracket still {br.width!r} wide after {iterations} bisections")
        br = bisect_step(lp, br, tol, trace)
        iterations += 1

    return SolveOutcome(
        Status.OPTIMAL,
        x_star=br.witness,
        value=evaluate_objective(lp, br.witness),
        bracket_width=br.width,
        iterations=iterations,
        trace=trace,
        initial_bracket=first,
        bracket_trace=bracket_trace,
        minimize=lp.minimize,
    )


def expected_iterations(initial_width: float, epsilon: float) -> int:
    """Number of halvings needed to bring a bracket down to epsilon."""
    if initial_width <= epsilon:
        return 0
    return math.ceil(math.log2(initial_width / epsilon))


def replay_widths(outcome: SolveOutcome) -> list[float]:
    """Bracket widths reconstructed from the trace, starting with the initial one."""
    lo, hi = outcome.initial_bracket
    widths = [hi - lo]
    for alpha, feasible in outcome.trace:
        if feasible:
            lo = alpha
        else:
            hi = alpha
        widths.append(hi - lo)
    return widths
