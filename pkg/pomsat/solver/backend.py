from typing import Optional, Text

from pomsat.cnf import CnfFormula
from pomsat.exceptions import ModelValidationError
from pomsat.solver.cdcl import solve_embedded
from pomsat.solver.external import solve_external
from pomsat.solver.validate import check_model
from pomsat.types.solver import SatOutcome, SatStatus

EMBEDDED_BACKEND = "embedded"
EXTERNAL_PREFIX = "external:"


def check_backend(backend: Text) -> Text:
    if backend == EMBEDDED_BACKEND:
        return backend
    if backend.startswith(EXTERNAL_PREFIX) and backend[len(EXTERNAL_PREFIX) :].strip():
        return backend
    raise ValueError(
        f"Unknown backend '{backend}', expected 'embedded' or 'external:<command>'"
    )


def solve(
    formula: CnfFormula,
    backend: Text = EMBEDDED_BACKEND,
    *,
    seed: Optional[int] = None,
    conflict_budget: Optional[int] = None,
) -> SatOutcome:
    """Solve ``formula`` and validate any returned model against it."""

    check_backend(backend)
    if backend == EMBEDDED_BACKEND:
        outcome = solve_embedded(
            formula.num_vars,
            formula.clauses,
            seed=seed,
            conflict_budget=conflict_budget,
        )
    else:
        outcome = solve_external(formula, backend[len(EXTERNAL_PREFIX) :])

    if outcome.status == SatStatus.SAT:
        if outcome.model is None or len(outcome.model) < formula.num_vars:
            raise ModelValidationError("SAT outcome without a complete model")
        check_model(formula.clauses, outcome.model)
    return outcome
