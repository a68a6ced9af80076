from covers.config import SolverConfig
from covers.greedy import greedy_cover
from covers.schemas import CliqueCover, CoverMode, CoverReport, Objective, SolveResult
from covers.solver import CoverSolver, solve_all, solve_cover
from covers.verification import cover_count, cover_weight, verify_cover

__all__ = [
    "CliqueCover",
    "CoverMode",
    "CoverReport",
    "CoverSolver",
    "Objective",
    "SolveResult",
    "SolverConfig",
    "cover_count",
    "cover_weight",
    "greedy_cover",
    "solve_all",
    "solve_cover",
    "verify_cover",
]
