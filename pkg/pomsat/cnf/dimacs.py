from typing import List, Optional, Text, Tuple

from pomsat.cnf.formula import Clause, CnfFormula, VarMap
from pomsat.exceptions import CnfError


def to_dimacs(formula: CnfFormula, var_map: Optional[VarMap] = None) -> Text:
    """Render DIMACS CNF, preceded by ``c <key> <index>`` lines for named vars."""

    var_map = formula.var_map if var_map is None else var_map
    lines = [f"c {key} {index}" for key, index in var_map if key.kind != "AUX"]
    lines.append(f"p cnf {formula.num_vars} {formula.num_clauses}")
    lines.extend(" ".join(str(lit) for lit in clause) + " 0" for clause in formula)
    return "\n".join(lines) + "\n"


def parse_dimacs(text: Text) -> Tuple[int, List[Clause]]:
    num_vars: Optional[int] = None
    num_clauses = 0
    clauses: List[Clause] = []
    current: List[int] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise CnfError(f"line {lineno}: malformed header '{line}'")
            num_vars, num_clauses = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise CnfError(f"line {lineno}: clause before 'p cnf' header")
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise CnfError(f"line {lineno}: invalid literal '{token}'")
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            elif abs(lit) > num_vars:
                raise CnfError(f"line {lineno}: literal {lit} exceeds {num_vars}")
            else:
                current.append(lit)
    if current:
        clauses.append(tuple(current))
    if num_vars is None:
        raise CnfError("Missing 'p cnf' header")
    if len(clauses) != num_clauses:
        raise CnfError(f"Header declares {num_clauses} clauses, found {len(clauses)}")
    return num_vars, clauses
