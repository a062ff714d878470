from pomsat.cnf.dimacs import parse_dimacs, to_dimacs
from pomsat.cnf.expr import And, BoolExpr, Or, conj, disj
from pomsat.cnf.formula import (
    Clause,
    CnfFormula,
    VarKey,
    VarMap,
    add_clause,
    fresh_var,
)
from pomsat.cnf.tseitin import tseitin_iff

__all__ = [
    "And",
    "BoolExpr",
    "Clause",
    "CnfFormula",
    "Or",
    "VarKey",
    "VarMap",
    "add_clause",
    "conj",
    "disj",
    "fresh_var",
    "parse_dimacs",
    "to_dimacs",
    "tseitin_iff",
]
