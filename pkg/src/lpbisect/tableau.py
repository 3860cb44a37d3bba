"""Dense simplex tableau with Bland's pivoting rule.

The tableau always minimizes. Layout of ``T`` (m+1 rows, N+1 columns)::

    [ B^-1 A          | B^-1 b     ]   constraint rows
    [ reduced costs   | -objective ]   cost row
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IterationLimitError

PIVOT_TOL = 1e-9
RATIO_TIE_TOL = 1e-12


class Tableau:
    def __init__(self, A, b, cost, basis):
        A = np.asarray(A, dtype=float)
        m, N = A.shape
        self.m, self.N = m, N
        self.T = np.zeros((m + 1, N + 1))
        self.T[:m, :N] = A
        self.T[:m, N] = b
        self.basis = list(basis)
        self.pivots = 0
        if m and not np.allclose(self.T[:m, self.basis], np.eye(m)):
            raise ValueError("basis columns must form an identity block")
        self.set_cost(cost)

    def set_cost(self, cost) -> None:
        cost = np.asarray(cost, dtype=float)
        cb = cost[self.basis]
        self.T[self.m, : self.N] = cost - cb @ self.T[: self.m, : self.N]
        self.T[self.m, self.N] = -cb @ self.T[: self.m, self.N]

    @property
    def objective(self) -> float:
        return -float(self.T[self.m, self.N])

    def solution(self) -> np.ndarray:
        z = np.zeros(self.N)
        z[self.basis] = self.T[: self.m, self.N]
        return z

    def entering(self, allowed: np.ndarray) -> int | None:
        # Bland: lowest-index improving column
        candidates = np.flatnonzero(allowed & (self.T[self.m, : self.N] < -PIVOT_TOL))
        return int(candidates[0]) if candidates.size else None

    def leaving(self, col: int) -> int | None:
        column = self.T[: self.m, col]
        rows = np.flatnonzero(column > PIVOT_TOL)
        if rows.size == 0:
            return None
        ratios = self.T[rows, self.N] / column[rows]
        best = ratios.min()
        tied = rows[ratios <= best + RATIO_TIE_TOL * (1.0 + abs(best))]
        # Bland: among tied rows, the one whose basic variable has the lowest index
        return int(min(tied, key=lambda r: self.basis[r]))

    def pivot(self, row: int, col: int) -> None:
        T = self.T
        T[row] /= T[row, col]
        factors = T[:, col].copy()
        factors[row] = 0.0
        T -= np.outer(factors, T[row])
        T[:, col] = 0.0
        T[row, col] = 1.0
        self.basis[row] = col
        self.pivots += 1

    def run(self, allowed=None, max_pivots: int | None = None) -> str:
        """Pivot to optimality. Returns ``"optimal"`` or ``"unbounded"``."""
        if allowed is None:
            allowed = np.ones(self.N, dtype=bool)
        if max_pivots is None:
            max_pivots = 10 * (self.m + self.N)
        start = self.pivots
        while True:
            col = self.entering(allowed)
            if col is None:
                return "optimal"
            row = self.leaving(col)
            if row is None:
                return "unbounded"
            if self.pivots - start >= max_pivots:
                raise IterationLimitError(
                    f"simplex exceeded {max_pivots} pivots ({self.m} rows, {self.N} columns)")
            self.pivot(row, col)

    def delete_row(self, row: int) -> None:
        self.T = np.delete(self.T, row, axis=0)
        del self.basis[row]
        self.m -= 1

    def delete_columns(self, first: int) -> None:
        """Drop columns ``first..N-1``; none of them may be basic."""
        assert all(j < first for j in self.basis)
        self.T = np.hstack([self.T[:, :first], self.T[:, -1:]])
        self.N = first


@dataclass
class PhaseOne:
    tableau: Tableau
    n_columns: int          # columns of the original system; artificials follow
    objective: float        # minimal sum of artificial variables

    @property
    def point(self) -> np.ndarray:
        return self.tableau.solution()[: self.n_columns]


def phase_one(A_eq, b, unit_column_of_row: dict[int, int],
              max_pivots: int | None = None) -> PhaseOne:
    """Minimize the sum of artificials over A_eq z = b, z >= 0.

    ``unit_column_of_row`` names, for each row, a column equal to that row's
    unit vector (the slack). Rows with b >= 0 start with it in the basis; the
    others are negated and receive an artificial variable.
    """
    A = np.array(A_eq, dtype=float)
    b = np.array(b, dtype=float)
    m, N = A.shape
    negative = np.flatnonzero(b < 0)
    A[negative] *= -1.0
    b[negative] *= -1.0

    k = len(negative)
    A_aug = np.hstack([A, np.zeros((m, k))])
    basis = [unit_column_of_row[i] for i in range(m)]
    for a, row in enumerate(negative):
        A_aug[row, N + a] = 1.0
        basis[row] = N + a
    cost = np.concatenate([np.zeros(N), np.ones(k)])

    tab = Tableau(A_aug, b, cost, basis)
    if k:
        tab.run(max_pivots=max_pivots)
    objective = max(tab.objective, 0.0)
    return PhaseOne(tab, N, objective)


def drive_out_artificials(p1: PhaseOne) -> Tableau:
    """Remove artificial variables from a feasible Phase-I tableau.

    Basic artificials sit at zero; each is pivoted out on any nonzero
    original column, or its row is dropped as redundant.
    """
    tab = p1.tableau
    N = p1.n_columns
    row = 0
    while row < tab.m:
        if tab.basis[row] >= N:
            entries = np.abs(tab.T[row, :N])
            nonbasic = np.ones(N, dtype=bool)
            nonbasic[[j for j in tab.basis if j < N]] = False
            choices = np.flatnonzero(nonbasic & (entries > PIVOT_TOL))
            if choices.size:
                tab.pivot(row, int(choices[0]))
            else:
                tab.delete_row(row)
                continue
        row += 1
    tab.delete_columns(N)
    return tab
