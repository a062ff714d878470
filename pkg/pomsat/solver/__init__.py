from pomsat.solver.backend import EMBEDDED_BACKEND, check_backend, solve
from pomsat.solver.cdcl import CdclSolver, luby, solve_embedded
from pomsat.solver.external import parse_solver_output, solve_external
from pomsat.solver.validate import check_model, first_falsified, validate_model

__all__ = [
    "EMBEDDED_BACKEND",
    "CdclSolver",
    "check_backend",
    "check_model",
    "first_falsified",
    "luby",
    "parse_solver_output",
    "solve",
    "solve_embedded",
    "solve_external",
    "validate_model",
]
