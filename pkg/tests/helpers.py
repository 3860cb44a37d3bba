"""Instance families and independent oracles shared by the test modules.

The oracles here deliberately avoid the package's own tableau and vertex
code: vertices are found with numpy.linalg.solve and optima with scipy's
HiGHS solver.
"""
import itertools

import numpy as np
from scipy.optimize import linprog

from lpbisect import LinearProgram, certify_unbounded, generate_random_instance


def interval_lp():
    """{x <= 1}, maximize x."""
    return LinearProgram([1.0], [[1.0]], [1.0])


def two_var_lp():
    """max x1 + x2 s.t. x1 + 2 x2 <= 4, 3 x1 + x2 <= 6; optimum 14/5 at (8/5, 6/5)."""
    return LinearProgram([1.0, 1.0], [[1.0, 2.0], [3.0, 1.0]], [4.0, 6.0])


def empty_lp(c=(1.0,)):
    """{x <= -1} with x >= 0."""
    return LinearProgram(list(c), [[1.0] * len(c)], [-1.0])


def free_lp():
    """No rows at all, maximize x."""
    return LinearProgram([1.0], np.zeros((0, 1)), [])


def enumerate_vertices(A, b):
    """Every feasible vertex of {A x <= b, x >= 0}, via numpy.linalg.solve."""
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    m, n = A.shape
    planes = np.vstack([A, np.eye(n)])
    rhs = np.concatenate([b, np.zeros(n)])
    out = []
    for idx in itertools.combinations(range(m + n), n):
        M = planes[list(idx)]
        if abs(np.linalg.det(M)) < 1e-12:
            continue
        x = np.linalg.solve(M, rhs[list(idx)])
        if np.all(A @ x <= b + 1e-9) and np.all(x >= -1e-9):
            out.append(x)
    return out


def highs(lp):
    """(status, value) from scipy's HiGHS: 'optimal' | 'infeasible' | 'unbounded'."""
    res = linprog(-lp.c, A_ub=lp.A if lp.m else None, b_ub=lp.b if lp.m else None,
                  bounds=[(0, None)] * lp.n, method="highs",
                  # presolve can report "infeasible" for unbounded problems
                  options={"presolve": False})
    status = {0: "optimal", 2: "infeasible", 3: "unbounded"}[res.status]
    return status, (-res.fun if res.status == 0 else None)


def acceptance_instances(count=200, start_seed=0):
    """First ``count`` bounded random instances with n, m in 2..8 and b >= 1."""
    found = []
    seed = start_seed
    while len(found) < count:
        n = 2 + seed % 7
        m = 2 + (seed // 7) % 7
        lp = generate_random_instance(n, m, seed)
        if not certify_unbounded(lp):
            found.append(lp)
        seed += 1
    return found


def micro_instances(seeds=range(100)):
    """n <= 3, m <= 4; odd seeds allow negative b so every status shows up."""
    for seed in seeds:
        n = 1 + seed % 3
        m = 1 + (seed // 3) % 4
        yield generate_random_instance(n, m, seed, allow_negative_b=bool(seed % 2))
