from typing import Tuple

from pomsat.cnf import And, CnfFormula, Or, VarKey, VarMap, tseitin_iff
from pomsat.config import logger
from pomsat.types.encoder import EncodeParams
from pomsat.types.pomdp import Pomdp


def encode_small_memory(
    p: Pomdp, params: EncodeParams
) -> Tuple[CnfFormula, VarMap]:
    """Encode existence of a winning strategy with ``params.mu`` memory states.

    Actions depend on the memory state only. The memory update reads the
    observation of the successor state. Variables, in allocation order:
    ``A(m, a)``, ``C(i, m)``, ``P(i, m, j)``, ``M(m, z, a, m2)``.
    """

    k, mu = params.k, params.mu
    states = range(p.num_states)
    actions = range(p.num_actions)
    memories = range(mu)
    observations = range(p.num_observations)
    goal = p.goal
    obs = p.observation_of

    var_map = VarMap()
    for m in memories:
        for a in actions:
            var_map.fresh_var(VarKey("A", (m, a)))
    for i in states:
        for m in memories:
            var_map.fresh_var(VarKey("C", (i, m)))
    for i in states:
        for m in memories:
            for j in range(k + 1):
                var_map.fresh_var(VarKey("P", (i, m, j)))
    for m in memories:
        for z in observations:
            for a in actions:
                for m2 in memories:
                    var_map.fresh_var(VarKey("M", (m, z, a, m2)))

    def A(m: int, a: int) -> int:
        return var_map.var("A", m, a)

    def C(i: int, m: int) -> int:
        return var_map.var("C", i, m)

    def P(i: int, m: int, j: int) -> int:
        return var_map.var("P", i, m, j)

    def M(m: int, z: int, a: int, m2: int) -> int:
        return var_map.var("M", m, z, a, m2)

    formula = CnfFormula(var_map)

    for m in memories:
        formula.add_clause([A(m, a) for a in actions])
    for m in memories:
        for z in observations:
            for a in actions:
                formula.add_clause([M(m, z, a, m2) for m2 in memories])

    for i in states:
        for m in memories:
            for a in actions:
                for succ in p.supports[i][a]:
                    z = obs[succ]
                    for m2 in memories:
                        if (succ, m2) == (i, m):
                            continue
                        formula.add_clause(
                            (-C(i, m), -A(m, a), -M(m, z, a, m2), C(succ, m2))
                        )

    formula.add_clause((C(p.initial, params.m0),))
    for m in memories:
        for j in range(k + 1):
            formula.add_clause((P(goal, m, j),))
    for i in states:
        for m in memories:
            formula.add_clause((-C(i, m), P(i, m, k)))
    for i in states:
        if i == goal:
            continue
        for m in memories:
            formula.add_clause((-P(i, m, 0),))

    for i in states:
        if i == goal:
            continue
        for m in memories:
            for j in range(1, k + 1):
                rhs = Or(
                    tuple(
                        And(
                            (
                                A(m, a),
                                Or(
                                    tuple(
                                        And(
                                            (
                                                M(m, obs[succ], a, m2),
                                                P(succ, m2, j - 1),
                                            )
                                        )
                                        for succ in p.supports[i][a]
                                        for m2 in memories
                                    )
                                ),
                            )
                        )
                        for a in actions
                    )
                )
                tseitin_iff(
                    formula,
                    var_map,
                    P(i, m, j),
                    rhs,
                    both_directions=params.both_directions,
                )

    logger.debug(
        f"Encoded {params.label}: {formula.num_vars} vars, "
        + f"{formula.num_clauses} clauses"
    )
    return formula, var_map
