from pomsat.cnf.expr import And, BoolExpr, simplify
from pomsat.cnf.formula import CnfFormula, VarKey, VarMap


def tseitin_iff(
    formula: CnfFormula,
    var_map: VarMap,
    lhs: int,
    rhs: BoolExpr,
    *,
    both_directions: bool = True,
) -> None:
    """Add clauses equisatisfiable with ``lhs <-> rhs``.

    Every internal node below the root gets one AUX variable. Without
    ``both_directions`` only ``lhs -> rhs`` is encoded, each auxiliary
    implying its own definition.
    """

    rhs = simplify(rhs)
    if isinstance(rhs, int):
        formula.add_clause((-lhs, rhs))
        if both_directions:
            formula.add_clause((lhs, -rhs))
        return
    _define(formula, var_map, lhs, rhs, both_directions)


def _define(
    formula: CnfFormula,
    var_map: VarMap,
    out: int,
    node: BoolExpr,
    both_directions: bool,
) -> None:
    assert not isinstance(node, int)
    literals = [
        child
        if isinstance(child, int)
        else _auxiliary(formula, var_map, child, both_directions)
        for child in node.children
    ]
    if isinstance(node, And):
        for lit in literals:
            formula.add_clause((-out, lit))
        if both_directions:
            formula.add_clause([out] + [-lit for lit in literals])
    else:
        formula.add_clause([-out] + literals)
        if both_directions:
            for lit in literals:
                formula.add_clause((out, -lit))


def _auxiliary(
    formula: CnfFormula, var_map: VarMap, node: BoolExpr, both_directions: bool
) -> int:
    aux = var_map.fresh_var(VarKey("AUX", (var_map.num_vars + 1,)))
    _define(formula, var_map, aux, node, both_directions)
    return aux
