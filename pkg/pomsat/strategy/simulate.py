from typing import Dict, FrozenSet, List, Optional

import numpy as np
from pydantic import BaseModel

from pomsat.types.pomdp import Pomdp
from pomsat.types.strategy import FiniteMemoryStrategy


class Play(BaseModel):
    states: List[int]
    memories: List[int]
    actions: List[int]
    reached_goal: bool

    @property
    def steps(self) -> int:
        return len(self.actions)


def uniform_distribution(support: FrozenSet[int]) -> Dict[int, float]:
    if not support:
        raise ValueError("Cannot spread probability over an empty support")
    weight = 1.0 / len(support)
    return {x: weight for x in sorted(support)}


def _sample(rng: np.random.Generator, distribution: Dict[int, float]) -> int:
    keys = list(distribution)
    probs = np.array([distribution[k] for k in keys])
    return keys[int(rng.choice(len(keys), p=probs / probs.sum()))]


def simulate_play(
    p: Pomdp,
    strategy: FiniteMemoryStrategy,
    seed: Optional[int] = 0,
    max_steps: int = 1000,
) -> Play:
    """Sample one play, drawing uniformly from the strategy's supports."""

    rng = np.random.default_rng(seed)
    state, memory = p.initial, strategy.m0
    play = Play(states=[state], memories=[memory], actions=[], reached_goal=False)
    for _ in range(max_steps):
        if state == p.goal:
            break
        observation = p.observation_of[state]
        action = _sample(
            rng, uniform_distribution(strategy.actions_at(memory, observation))
        )
        state = _sample(rng, dict(p.transitions[state][action]))
        memory = _sample(
            rng,
            uniform_distribution(
                strategy.memory_successors(memory, p.observation_of[state], action)
            ),
        )
        play.actions.append(action)
        play.states.append(state)
        play.memories.append(memory)
    play.reached_goal = state == p.goal
    return play
