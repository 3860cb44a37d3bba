"""Emptiness tests for the constraint polytope and its objective level sets.

Each query is a fresh two-phase Phase-I solve on the slack form of the
constraints; nothing is cached between calls.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .model import LinearProgram, check_feasible_point, to_standard_form
from .tableau import phase_one
from .tolerances import DEFAULT_TOLERANCES, ToleranceSet


class Feasibility(enum.Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True, eq=False)
class FeasibilityResult:
    status: Feasibility
    witness: np.ndarray | None
    phase1_objective: float

    @property
    def feasible(self) -> bool:
        return self.status is Feasibility.FEASIBLE

    def __bool__(self):
        return self.feasible


def _phase_one_verdict(lp: LinearProgram, tol: ToleranceSet) -> FeasibilityResult:
    sf = to_standard_form(lp)
    p1 = phase_one(sf.A_eq, sf.b, sf.slack_index_of_row)
    if p1.objective > tol.tol_phase1:
        return FeasibilityResult(Feasibility.INFEASIBLE, None, p1.objective)
    witness, _ = sf.split(p1.point)
    witness = witness.copy()
    witness.flags.writeable = False
    return FeasibilityResult(Feasibility.FEASIBLE, witness, p1.objective)


def find_feasible_point(lp: LinearProgram,
                        tol: ToleranceSet = DEFAULT_TOLERANCES) -> FeasibilityResult:
    """A point of K = {A x <= b, x >= 0}, or a Phase-I proof that K is empty.

    When b >= 0 the origin is returned without pivoting.
    """
    if np.all(lp.b >= 0):
        origin = np.zeros(lp.n)
        origin.flags.writeable = False
        return FeasibilityResult(Feasibility.FEASIBLE, origin, 0.0)
    return _phase_one_verdict(lp, tol)


def level_set_program(lp: LinearProgram, alpha: float) -> LinearProgram:
    """K intersected with {c.x = alpha}, the equality written as two opposed rows."""
    return lp.with_rows(np.vstack([lp.c, -lp.c]), [alpha, -alpha])


def check_level_feasible(lp: LinearProgram, alpha: float,
                         tol: ToleranceSet = DEFAULT_TOLERANCES) -> FeasibilityResult:
    """Does the hyperplane {c.x = alpha} meet K?"""
    alpha = float(alpha)
    if not np.isfinite(alpha):
        raise ValueError(f"level must be finite, got {alpha!r}")
    return _phase_one_verdict(level_set_program(lp, alpha), tol)


def ray_program(lp: LinearProgram) -> LinearProgram:
    """{d : A d <= 0, d >= 0}, whose level set c.d = 1 holds the improving rays."""
    return LinearProgram(lp.c, lp.A, np.zeros(lp.m), name=lp.name)


def certify_unbounded(lp: LinearProgram, tol: ToleranceSet = DEFAULT_TOLERANCES) -> bool:
    """True iff some d >= 0 has A d <= 0 and c.d = 1.

    Combined with a nonempty K this proves sup c.x = +inf.
    """
    if not np.any(lp.c):
        return False
    return check_level_feasible(ray_program(lp), 1.0, tol).feasible


def witness_is_sound(lp: LinearProgram, result: FeasibilityResult,
                     tol: ToleranceSet = DEFAULT_TOLERANCES,
                     alpha: float | None = None) -> bool:
    if not result.feasible:
        return result.phase1_objective > tol.tol_phase1
    if not check_feasible_point(lp, result.witness, tol.tol_feas):
        return False
    return alpha is None or lp.objective_hyperplane(alpha).contains(result.witness, tol.tol_eq)
