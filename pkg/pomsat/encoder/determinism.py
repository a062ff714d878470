import itertools

from pomsat.cnf import CnfFormula, VarMap
from pomsat.pomdp import observation_classes
from pomsat.types.encoder import EncodeParams
from pomsat.types.pomdp import Pomdp


def _at_most_one(formula: CnfFormula, variables) -> None:
    for x, y in itertools.combinations(variables, 2):
        formula.add_clause((-x, -y))


def add_determinism(
    formula: CnfFormula, var_map: VarMap, p: Pomdp, params: EncodeParams
) -> None:
    """Restrict every support to exactly one element.

    At-least-one is already part of both encodings, so only pairwise
    at-most-one clauses are added: per observation class for the memoryless
    encoding, per memory state and per memory-update context otherwise.
    """

    actions = range(p.num_actions)
    if params.encoding == "memoryless":
        for members in observation_classes(p).classes:
            rep = members[0]
            _at_most_one(formula, [var_map.var("A", rep, a) for a in actions])
        return

    memories = range(params.mu)
    for m in memories:
        _at_most_one(formula, [var_map.var("A", m, a) for a in actions])
    for m in memories:
        for z in range(p.num_observations):
            for a in actions:
                _at_most_one(
                    formula, [var_map.var("M", m, z, a, m2) for m2 in memories]
                )
