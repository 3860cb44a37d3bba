"""Exact baselines for validating the bisection solver.

``simplex_solve`` is a two-phase dense-tableau primal simplex with Bland's
rule. ``brute_force_optimum`` enumerates every candidate vertex and is only
meant for tiny instances.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import InstanceTooLargeError
from .feasibility import certify_unbounded, find_feasible_point
from .model import LinearProgram, Status, to_standard_form
from .tableau import drive_out_artificials, phase_one
from .tolerances import DEFAULT_TOLERANCES, ToleranceSet

SINGULAR_PIVOT = 1e-10
MAX_BRUTE_FORCE_N = 6
MAX_BRUTE_FORCE_CANDIDATES = 50_000


@dataclass(frozen=True, eq=False)
class SimplexResult:
    status: Status
    x_star: np.ndarray | None = None
    value: float | None = None
    pivots: int = 0
    minimize: bool = False


def simplex_solve(lp: LinearProgram, tol: ToleranceSet = DEFAULT_TOLERANCES) -> SimplexResult:
    sf = to_standard_form(lp)
    p1 = phase_one(sf.A_eq, sf.b, sf.slack_index_of_row)
    if p1.objective > tol.tol_phase1:
        return SimplexResult(Status.INFEASIBLE, pivots=p1.tableau.pivots, minimize=lp.minimize)

    tab = drive_out_artificials(p1)
    tab.set_cost(-sf.c_ext)
    if tab.run() == "unbounded":
        return SimplexResult(Status.UNBOUNDED, pivots=tab.pivots, minimize=lp.minimize)

    x, _ = sf.split(tab.solution())
    x = x.copy()
    x.flags.writeable = False
    return SimplexResult(Status.OPTIMAL, x, float(lp.c @ x), tab.pivots, lp.minimize)


def _solve_square(M: np.ndarray, rhs: np.ndarray) -> np.ndarray | None:
    """Gaussian elimination with partial pivoting; None when a pivot is below SINGULAR_PIVOT."""
    M = M.astype(float).copy()
    rhs = rhs.astype(float).copy()
    k = len(rhs)
    for col in range(k):
        p = col + int(np.argmax(np.abs(M[col:, col])))
        if abs(M[p, col]) < SINGULAR_PIVOT:
            return None
        if p != col:
            M[[col, p]] = M[[p, col]]
            rhs[[col, p]] = rhs[[p, col]]
        for r in range(col + 1, k):
            f = M[r, col] / M[col, col]
            M[r, col:] -= f * M[col, col:]
            rhs[r] -= f * rhs[col]
    x = np.zeros(k)
    for r in range(k - 1, -1, -1):
        x[r] = (rhs[r] - M[r, r + 1:] @ x[r + 1:]) / M[r, r]
    return x


def candidate_vertices(lp: LinearProgram):
    """Yield the intersection point of every nonsingular choice of n active planes.

    The planes are the m constraint rows at equality and the n coordinate
    planes x_j = 0.
    """
    n = lp.n
    planes = np.vstack([lp.A, np.eye(n)])
    rhs = np.concatenate([lp.b, np.zeros(n)])
    for active in itertools.combinations(range(len(rhs)), n):
        idx = list(active)
        x = _solve_square(planes[idx], rhs[idx])
        if x is not None:
            yield x


def brute_force_optimum(lp: LinearProgram, tol: ToleranceSet = DEFAULT_TOLERANCES) -> SimplexResult:
    n, m = lp.n, lp.m
    count = math.comb(m + n, n)
    if n > MAX_BRUTE_FORCE_N or count > MAX_BRUTE_FORCE_CANDIDATES:
        raise InstanceTooLargeError(
            f"n={n}, m={m}: {count} candidate vertices is beyond the enumeration limit")

    best_x, best_value = None, -math.inf
    for x in candidate_vertices(lp):
        scale = 1.0 + max(np.abs(x).max(initial=0.0), np.abs(lp.b).max(initial=0.0))
        if np.all(lp.A @ x <= lp.b + 1e-9 * scale) and np.all(x >= -1e-9 * scale):
            value = float(lp.c @ x)
            if value > best_value:
                best_x, best_value = x, value

    if best_x is None:
        if find_feasible_point(lp, tol).feasible:
            raise RuntimeError("no vertex is feasible but Phase-I found a feasible point")
        return SimplexResult(Status.INFEASIBLE, minimize=lp.minimize)
    if certify_unbounded(lp, tol):
        return SimplexResult(Status.UNBOUNDED, minimize=lp.minimize)
    return SimplexResult(Status.OPTIMAL, best_x, best_value, minimize=lp.minimize)
