from dataclasses import dataclass, fields


@dataclass(frozen=True)
class ToleranceSet:
    """Stopping rule and numerical thresholds shared by every solver.

    epsilon       -- bisection stops once the bracket is at most this wide
    tol_feas      -- allowed constraint violation of a witness point
    tol_eq        -- allowed gap between c.x and the queried level
    tol_phase1    -- a Phase-I optimum above this means "empty"
    max_bisections, max_doublings -- loop budgets; exceeding one is an error
    """

    epsilon: float = 1e-6
    tol_feas: float = 1e-7
    tol_eq: float = 1e-7
    tol_phase1: float = 1e-8
    max_bisections: int = 200
    max_doublings: int = 64

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not value > 0:
                raise ValueError(f"{f.name} must be strictly positive, got {value!r}")
        if self.max_bisections < 1:
            raise ValueError("max_bisections must be at least 1")


DEFAULT_TOLERANCES = ToleranceSet()
