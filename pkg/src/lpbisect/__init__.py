"""Linear programming by dichotomic translation of the objective hyperplane."""
from .bisection import Bracket, SolveOutcome, bisect_step, initial_bracket, solve
from .errors import (DimensionError, InstanceTooLargeError, IterationLimitError, LPError,
                     LPTSyntaxError)
from .feasibility import (Feasibility, FeasibilityResult, certify_unbounded,
                          check_level_feasible, find_feasible_point)
from .generate import generate_random_instance
from .lpt import parse_lp_text, render_lp_text
from .model import (Hyperplane, LinearProgram, StandardFormLP, Status, check_feasible_point,
                    evaluate_objective, to_standard_form)
from .report import Comparison, SolverConfig, write_outcome
from .simplex import SimplexResult, brute_force_optimum, simplex_solve
from .tolerances import DEFAULT_TOLERANCES, ToleranceSet

__all__ = [
    "Bracket", "Comparison", "DEFAULT_TOLERANCES", "DimensionError", "Feasibility",
    "FeasibilityResult", "Hyperplane", "InstanceTooLargeError", "IterationLimitError",
    "LPError", "LPTSyntaxError", "LinearProgram", "SimplexResult", "SolveOutcome",
    "SolverConfig", "StandardFormLP", "Status", "ToleranceSet", "bisect_step",
    "brute_force_optimum", "certify_unbounded", "check_feasible_point",
    "check_level_feasible", "evaluate_objective", "find_feasible_point",
    "generate_random_instance", "initial_bracket", "parse_lp_text", "render_lp_text",
    "simplex_solve", "solve", "to_standard_form", "write_outcome",
]
