from typing import Dict, FrozenSet, Sequence

from pomsat.cnf import VarMap
from pomsat.exceptions import EmptySupport, StrategyError
from pomsat.pomdp import observation_classes
from pomsat.types.encoder import EncodeParams
from pomsat.types.pomdp import Pomdp
from pomsat.types.strategy import FiniteMemoryStrategy


def extract_strategy(
    model: Sequence[bool], var_map: VarMap, params: EncodeParams, p: Pomdp
) -> FiniteMemoryStrategy:
    """Read the strategy encoded by a satisfying assignment.

    ``model[v - 1]`` is the value of variable ``v``.
    """

    def true(kind: str, *args: int) -> bool:
        return bool(model[var_map.var(kind, *args) - 1])

    actions = range(p.num_actions)
    if params.encoding == "memoryless":
        observation_support: Dict[int, FrozenSet[int]] = {
            z: frozenset({0}) for z in range(p.num_observations)
        }
        for members in observation_classes(p).classes:
            rep = members[0]
            z = p.observation_of[rep]
            support = frozenset(a for a in actions if true("A", rep, a))
            if not support:
                raise EmptySupport(f"No action at observation '{p.observations[z]}'")
            for other in members[1:]:
                if frozenset(a for a in actions if true("A", other, a)) != support:
                    raise StrategyError(
                        f"States '{p.states[rep]}' and '{p.states[other]}' share "
                        + "an observation but not an action support"
                    )
            observation_support[z] = support
        return FiniteMemoryStrategy(
            mu=1,
            m0=0,
            num_observations=p.num_observations,
            num_actions=p.num_actions,
            observation_support=observation_support,
            deterministic=all(len(s) == 1 for s in observation_support.values()),
        )

    memories = range(params.mu)
    action_support = []
    for m in memories:
        support = frozenset(a for a in actions if true("A", m, a))
        if not support:
            raise EmptySupport(f"No action at memory state {m}")
        action_support.append(support)
    update_support = []
    for m in memories:
        by_obs = []
        for z in range(p.num_observations):
            by_act = []
            for a in actions:
                support = frozenset(m2 for m2 in memories if true("M", m, z, a, m2))
                if not support:
                    raise EmptySupport(
                        f"No memory update at ({m}, {p.observations[z]}, "
                        + f"{p.actions[a]})"
                    )
                by_act.append(support)
            by_obs.append(tuple(by_act))
        update_support.append(tuple(by_obs))
    deterministic = all(len(s) == 1 for s in action_support) and all(
        len(s) == 1 for by_obs in update_support for by_act in by_obs for s in by_act
    )
    return FiniteMemoryStrategy(
        mu=params.mu,
        m0=params.m0,
        num_observations=p.num_observations,
        num_actions=p.num_actions,
        action_support=tuple(action_support),
        update_support=tuple(update_support),
        deterministic=deterministic,
    )
