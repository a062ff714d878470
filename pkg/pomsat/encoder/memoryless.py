import itertools
from typing import Tuple

from pomsat.cnf import And, CnfFormula, Or, VarKey, VarMap, tseitin_iff
from pomsat.config import logger
from pomsat.pomdp import observation_classes
from pomsat.types.encoder import EncodeParams
from pomsat.types.pomdp import Pomdp


def encode_memoryless(p: Pomdp, params: EncodeParams) -> Tuple[CnfFormula, VarMap]:
    """Encode existence of an observation-based memoryless winning strategy.

    Variables, allocated in this order: ``A(i, a)`` action ``a`` is in the
    support at state ``i``; ``C(i)`` state ``i`` is reachable; ``P(i, j)``
    the goal is reachable from ``i`` within ``j`` steps.
    """

    k = params.k
    states = range(p.num_states)
    actions = range(p.num_actions)
    goal = p.goal

    var_map = VarMap()
    for i in states:
        for a in actions:
            var_map.fresh_var(VarKey("A", (i, a)))
    for i in states:
        var_map.fresh_var(VarKey("C", (i,)))
    for i in states:
        for j in range(k + 1):
            var_map.fresh_var(VarKey("P", (i, j)))

    def A(i: int, a: int) -> int:
        return var_map.var("A", i, a)

    def C(i: int) -> int:
        return var_map.var("C", i)

    def P(i: int, j: int) -> int:
        return var_map.var("P", i, j)

    formula = CnfFormula(var_map)

    # Some action is played everywhere.
    for i in states:
        formula.add_clause([A(i, a) for a in actions])

    # States sharing an observation share their action support.
    for members in observation_classes(p).classes:
        for i, i2 in itertools.combinations(members, 2):
            for a in actions:
                formula.add_clause((-A(i, a), A(i2, a)))
                formula.add_clause((A(i, a), -A(i2, a)))

    # Reachability is closed under the supported successors.
    for i in states:
        for a in actions:
            for succ in p.supports[i][a]:
                if succ != i:
                    formula.add_clause((-C(i), -A(i, a), C(succ)))

    formula.add_clause((C(p.initial),))
    for j in range(k + 1):
        formula.add_clause((P(goal, j),))
    for i in states:
        formula.add_clause((-C(i), P(i, k)))
    for i in states:
        if i != goal:
            formula.add_clause((-P(i, 0),))

    # P(i, j) holds iff some supported action has a successor within j - 1 steps.
    for i in states:
        if i == goal:
            continue
        for j in range(1, k + 1):
            rhs = Or(
                tuple(
                    And(
                        (
                            A(i, a),
                            Or(tuple(P(succ, j - 1) for succ in p.supports[i][a])),
                        )
                    )
                    for a in actions
                )
            )
            tseitin_iff(
                formula,
                var_map,
                P(i, j),
                rhs,
                both_directions=params.both_directions,
            )

    logger.debug(
        f"Encoded {params.label}: {formula.num_vars} vars, "
        + f"{formula.num_clauses} clauses"
    )
    return formula, var_map
