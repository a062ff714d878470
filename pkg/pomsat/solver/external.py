import shlex
import subprocess
import tempfile
import time
from pathlib import Path
from typing import Dict, Optional, Text, Tuple

from pomsat.cnf import CnfFormula, to_dimacs
from pomsat.config import logger, settings
from pomsat.exceptions import ExternalSolverError
from pomsat.types.solver import SatOutcome, SatStatus, SolverStats

INPUT_PLACEHOLDER = "{input}"

STATUS_LINES: Dict[Text, SatStatus] = {
    "SATISFIABLE": SatStatus.SAT,
    "UNSATISFIABLE": SatStatus.UNSAT,
    "UNKNOWN": SatStatus.UNKNOWN,
}


def build_command(template: Text, input_path: Text) -> list:
    args = shlex.split(template)
    if not args:
        raise ExternalSolverError("Empty solver command")
    if INPUT_PLACEHOLDER in template:
        return [arg.replace(INPUT_PLACEHOLDER, input_path) for arg in args]
    return args + [input_path]


def parse_solver_output(
    text: Text, num_vars: int
) -> Tuple[Optional[SatStatus], Optional[Tuple[bool, ...]]]:
    """Read SAT-competition output: one ``s`` line and ``v`` value lines."""

    status: Optional[SatStatus] = None
    assigned: Dict[int, bool] = {}
    for line in text.splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "s":
            word = " ".join(parts[1:])
            if word not in STATUS_LINES:
                raise ExternalSolverError(f"Unrecognized status line '{line}'")
            status = STATUS_LINES[word]
        elif parts[0] == "v":
            for token in parts[1:]:
                try:
                    lit = int(token)
                except ValueError:
                    raise ExternalSolverError(f"Invalid value literal '{token}'")
                if lit == 0:
                    continue
                var = abs(lit)
                if var > num_vars:
                    raise ExternalSolverError(f"Value literal {lit} exceeds {num_vars}")
                if assigned.get(var, lit > 0) != (lit > 0):
                    raise ExternalSolverError(f"Variable {var} assigned both ways")
                assigned[var] = lit > 0

    if status != SatStatus.SAT:
        return status, None
    missing = [v for v in range(1, num_vars + 1) if v not in assigned]
    if missing:
        raise ExternalSolverError(
            f"Model incomplete: {len(missing)} variable(s) unassigned, "
            + f"first is {missing[0]}"
        )
    return status, tuple(assigned[v] for v in range(1, num_vars + 1))


def solve_external(
    formula: CnfFormula, command: Text, *, timeout: Optional[float] = None
) -> SatOutcome:
    """Run an external DIMACS solver through ``command``.

    ``{input}`` in ``command`` is replaced by the DIMACS file path, otherwise
    the path is appended as the last argument.
    """

    timeout = settings.external_solver_timeout if timeout is None else timeout
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp).joinpath("formula.cnf")
        path.write_text(to_dimacs(formula))
        args = build_command(command, str(path))
        logger.debug(f"Running external solver: {' '.join(args)}")
        started = time.perf_counter()
        try:
            proc = subprocess.run(args, capture_output=True, text=True, timeout=timeout)
        except FileNotFoundError as e:
            logger.error(f"External solver not found: {args[0]}")
            raise ExternalSolverError(f"Solver command not found: {args[0]}") from e
        except subprocess.TimeoutExpired:
            logger.warning(f"External solver timed out after {timeout} s")
            return SatOutcome(
                status=SatStatus.UNKNOWN,
                stats=SolverStats(time_ms=(time.perf_counter() - started) * 1000.0),
                backend="external",
            )
        elapsed_ms = (time.perf_counter() - started) * 1000.0

    status, model = parse_solver_output(proc.stdout, formula.num_vars)
    if status is None:
        stderr = proc.stderr.strip().splitlines()[-1:] if proc.stderr else []
        logger.error(f"External solver exited with {proc.returncode}: {stderr}")
        raise ExternalSolverError(
            f"Solver exited with code {proc.returncode} without a status line"
        )
    return SatOutcome(
        status=status,
        model=model,
        stats=SolverStats(time_ms=elapsed_ms),
        backend="external",
    )
