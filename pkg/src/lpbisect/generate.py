"""Seeded random instances for tests and benchmarks."""
from __future__ import annotations

import numpy as np

from .model import LinearProgram


def generate_random_instance(n: int, m: int, seed: int,
                             allow_negative_b: bool = False) -> LinearProgram:
    """Dense instance with A, c uniform on [-10, 10] and b uniform on [1, 10].

    b >= 1 keeps the origin strictly inside the feasible set. With
    ``allow_negative_b`` b is drawn from [-10, 10] instead, so the instance
    may be infeasible. Boundedness is never guaranteed.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must both be at least 1")
    rng = np.random.default_rng(seed)
    A = rng.uniform(-10.0, 10.0, size=(m, n))
    c = rng.uniform(-10.0, 10.0, size=n)
    while not np.any(c):
        c = rng.uniform(-10.0, 10.0, size=n)
    if allow_negative_b:
        b = rng.uniform(-10.0, 10.0, size=m)
    else:
        b = rng.uniform(1.0, 10.0, size=m)
    return LinearProgram(c, A, b, name=f"random-n{n}-m{m}-seed{seed}")
