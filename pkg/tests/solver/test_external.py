import sys
import textwrap

import pytest

from pomsat.cnf import CnfFormula, VarKey, VarMap
from pomsat.exceptions import ExternalSolverError, ModelValidationError
from pomsat.solver import parse_solver_output, solve, solve_external
from pomsat.solver.external import build_command
from pomsat.types.solver import SatStatus


@pytest.fixture
def formula() -> CnfFormula:
    var_map = VarMap()
    var_map.fresh_var(VarKey("C", (0,)))
    var_map.fresh_var(VarKey("C", (1,)))
    formula = CnfFormula(var_map)
    formula.add_clause([1, 2])
    formula.add_clause([1])
    return formula.freeze()


def _script(tmp_path, body: str) -> str:
    path = tmp_path.joinpath("fake_solver.py")
    path.write_text(textwrap.dedent(body))
    return f"{sys.executable} {path}"


ALL_TRUE = """\
    import sys

    text = open(sys.argv[-1]).read()
    header = [line for line in text.splitlines() if line.startswith("p cnf")][0]
    n = int(header.split()[2])
    print("c fake solver")
    print("s SATISFIABLE")
    print("v " + " ".join(str(v) for v in range(1, n + 1)) + " 0")
"""


def test_parse_solver_output():
    status, model = parse_solver_output("s SATISFIABLE\nv 1 -2\nv 3 0\n", 3)
    assert status == SatStatus.SAT
    assert model == (True, False, True)
    assert parse_solver_output("s UNSATISFIABLE\n", 3) == (SatStatus.UNSAT, None)
    assert parse_solver_output("c nothing\n", 3) == (None, None)


@pytest.mark.parametrize(
    "text, match",
    [
        ("s SATISFIABLE\nv 1 0\n", "Model incomplete"),
        ("s MAYBE\n", "Unrecognized status"),
        ("s SATISFIABLE\nv 1 -1 2 0\n", "both ways"),
        ("s SATISFIABLE\nv 1 2 5 0\n", "exceeds"),
    ],
)
def test_parse_solver_output_errors(text, match):
    with pytest.raises(ExternalSolverError, match=match):
        parse_solver_output(text, 2)


def test_build_command():
    assert build_command("solver --in {input} -q", "/tmp/f.cnf") == [
        "solver",
        "--in",
        "/tmp/f.cnf",
        "-q",
    ]
    assert build_command("solver -q", "/tmp/f.cnf") == ["solver", "-q", "/tmp/f.cnf"]


def test_external_sat(tmp_path, formula):
    outcome = solve_external(formula, _script(tmp_path, ALL_TRUE))
    assert outcome.status == SatStatus.SAT
    assert outcome.model == (True, True)
    assert outcome.backend == "external"


def test_external_through_backend(tmp_path, formula):
    outcome = solve(formula, "external:" + _script(tmp_path, ALL_TRUE))
    assert outcome.status == SatStatus.SAT


def test_external_unsat(tmp_path, formula):
    command = _script(tmp_path, 'print("s UNSATISFIABLE")\n')
    assert solve_external(formula, command).status == SatStatus.UNSAT


def test_external_without_status_line(tmp_path, formula):
    command = _script(tmp_path, "import sys\nsys.exit(3)\n")
    with pytest.raises(ExternalSolverError, match="without a status line"):
        solve_external(formula, command)


def test_external_timeout(tmp_path, formula):
    command = _script(tmp_path, "import time\ntime.sleep(10)\n")
    assert solve_external(formula, command, timeout=0.5).status == SatStatus.UNKNOWN


def test_external_missing_binary(formula):
    with pytest.raises(ExternalSolverError, match="not found"):
        solve_external(formula, "/nonexistent/solver-binary")


def test_backend_rejects_wrong_model(tmp_path, formula):
    command = _script(tmp_path, 'print("s SATISFIABLE")\nprint("v -1 -2 0")\n')
    with pytest.raises(ModelValidationError):
        solve(formula, "external:" + command)


def test_unknown_backend(formula):
    with pytest.raises(ValueError):
        solve(formula, "quantum")
