from typing import List

import numpy as np

from pomsat.benchgen.builder import PomdpBuilder
from pomsat.types.benchgen import RandomPomdpParams
from pomsat.types.pomdp import Pomdp


def random_pomdp(params: RandomPomdpParams) -> Pomdp:
    """A seeded random POMDP with an absorbing goal ``G`` observed as ``goal``.

    Every other state and action moves to between one and ``max_successors``
    distinct states with Dirichlet weights. Initial state is ``s0``.
    """

    rng = np.random.default_rng(params.seed)
    n = params.num_states
    builder = PomdpBuilder([f"a{i}" for i in range(params.num_actions)])
    observed = rng.integers(0, params.num_observations - 1, size=n - 1)
    for s in range(n - 1):
        builder.add_state(f"s{s}", f"z{observed[s]}")
    goal = builder.add_state("G", "goal")
    builder.self_loop(goal)

    max_successors = min(params.max_successors, n)
    for s in range(n - 1):
        for a in range(params.num_actions):
            count = int(rng.integers(1, max_successors + 1))
            targets = rng.choice(n, size=count, replace=False)
            weights = rng.dirichlet(np.ones(count))
            for succ, weight in zip(targets.tolist(), weights.tolist()):
                builder.add_transition(s, a, succ, weight)
    return builder.build(initial=0, goal=goal)


def random_corpus(
    count: int,
    seed: int = 0,
    max_states: int = 6,
    max_actions: int = 3,
    max_observations: int = 4,
) -> List[Pomdp]:
    """``count`` random models with sizes drawn up to the given maxima."""

    rng = np.random.default_rng(seed)
    corpus: List[Pomdp] = []
    for _ in range(count):
        params = RandomPomdpParams(
            num_states=int(rng.integers(2, max_states + 1)),
            num_actions=int(rng.integers(1, max_actions + 1)),
            num_observations=int(rng.integers(2, max_observations + 1)),
            seed=int(rng.integers(0, 2**31)),
        )
        corpus.append(random_pomdp(params))
    return corpus
