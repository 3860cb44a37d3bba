"""Canonical LP data: maximize c.x subject to A x <= b, x >= 0.

Every solver in the package works on this single form. Minimization and
equality/``>=`` rows are folded into it by the LPT reader.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError


class Status(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


def _frozen(values, ndim: int) -> np.ndarray:
    arr = np.array(values, dtype=float, ndmin=ndim)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class LinearProgram:
    """max c.x  s.t.  A x <= b,  x >= 0.

    ``minimize`` records that the source problem was a minimization whose
    objective has already been negated into ``c``; reported values must be
    negated back by whoever prints them.
    """

    c: np.ndarray
    A: np.ndarray
    b: np.ndarray
    name: str = ""
    minimize: bool = False

    def __post_init__(self):
        c = _frozen(self.c, 1)
        b = _frozen(self.b, 1)
        A = np.array(self.A, dtype=float)
        if A.size == 0:
            A = A.reshape(len(b), len(c))
        A.flags.writeable = False
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

        if c.ndim != 1 or len(c) == 0:
            raise DimensionError("c must be a non-empty vector")
        if A.ndim != 2 or A.shape != (len(b), len(c)):
            raise DimensionError(
                f"A has shape {A.shape}, expected ({len(b)}, {len(c)})")
        for label, arr in (("c", c), ("A", A), ("b", b)):
            if not np.all(np.isfinite(arr)):
                raise ValueError(f"{label} contains non-finite entries")

    @property
    def n(self) -> int:
        return len(self.c)

    @property
    def m(self) -> int:
        return len(self.b)

    def objective_hyperplane(self, level: float) -> Hyperplane:
        return Hyperplane(self.c, level, degenerate=not np.any(self.c))

    def with_rows(self, A_extra, b_extra) -> LinearProgram:
        """Copy of this problem with extra ``<=`` rows appended."""
        A_extra = np.atleast_2d(np.asarray(A_extra, dtype=float))
        return LinearProgram(
            self.c,
            np.vstack([self.A, A_extra]),
            np.concatenate([self.b, np.atleast_1d(b_extra)]),
            name=self.name,
            minimize=self.minimize,
        )

    def same_as(self, other: LinearProgram) -> bool:
        return (
            self.name == other.name
            and self.minimize == other.minimize
            and np.array_equal(self.c, other.c)
            and np.array_equal(self.A, other.A)
            and np.array_equal(self.b, other.b)
        )

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"LinearProgram{label}(n={self.n}, m={self.m})"


@dataclass(frozen=True, eq=False)
class Hyperplane:
    """The level set {x : coeffs.x = level}."""

    coeffs: np.ndarray
    level: float
    degenerate: bool = False

    def __post_init__(self):
        coeffs = _frozen(self.coeffs, 1)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "level", float(self.level))
        if not self.degenerate and not np.any(coeffs):
            raise ValueError("zero normal vector; pass degenerate=True to allow it")

    def residual(self, x) -> float:
        return float(np.dot(self.coeffs, x)) - self.level

    def contains(self, x, tol: float) -> bool:
        return abs(self.residual(x)) <= tol

    def translated(self, level: float) -> Hyperplane:
        # all hyperplanes in the family share the normal, so a translation is a new level
        return Hyperplane(self.coeffs, level, self.degenerate)


@dataclass(frozen=True, eq=False)
class StandardFormLP:
    """A_eq [x; s] = b with [x; s] >= 0, the slacks occupying the trailing columns."""

    A_eq: np.ndarray
    b: np.ndarray
    c_ext: np.ndarray
    original_n: int
    slack_index_of_row: dict[int, int] = field(default_factory=dict)

    def split(self, z):
        z = np.asarray(z, dtype=float)
        return z[: self.original_n], z[self.original_n:]


def to_standard_form(lp: LinearProgram) -> StandardFormLP:
    n, m = lp.n, lp.m
    A_eq = np.hstack([lp.A, np.eye(m)])
    c_ext = np.concatenate([lp.c, np.zeros(m)])
    A_eq.flags.writeable = False
    c_ext.flags.writeable = False
    return StandardFormLP(
        A_eq=A_eq,
        b=lp.b,
        c_ext=c_ext,
        original_n=n,
        slack_index_of_row={i: n + i for i in range(m)},
    )


def slack_extension(lp: LinearProgram, x) -> np.ndarray:
    """[x; b - A x], the standard-form image of a point."""
    x = _as_point(lp, x)
    return np.concatenate([x, lp.b - lp.A @ x])


def _as_point(lp: LinearProgram, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (lp.n,):
        raise DimensionError(f"point has shape {x.shape}, expected ({lp.n},)")
    return x


def evaluate_objective(lp: LinearProgram, x) -> float:
    return float(np.dot(lp.c, _as_point(lp, x)))


def check_feasible_point(lp: LinearProgram, x, tol: float = 0.0) -> bool:
    """True iff A x <= b + tol row by row and x >= -tol."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    x = _as_point(lp, x)
    return bool(np.all(lp.A @ x <= lp.b + tol) and np.all(x >= -tol))
