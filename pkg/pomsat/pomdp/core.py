from typing import Dict, Iterable, List, Optional, Sequence, Text, Tuple, Union

import numpy as np
from pydantic import ValidationError

from pomsat.config import logger
from pomsat.exceptions import PomdpValidationError
from pomsat.types.pomdp import Distribution, ObservationClasses, Pomdp, TargetedPomdp
from pomsat.utils.common import validation_error_message


def make_pomdp(
    *,
    states: Sequence[Text],
    actions: Sequence[Text],
    observations: Sequence[Text],
    transitions: Sequence[Sequence[Distribution]],
    observation_of: Sequence[int],
    initial: int,
    goal: int,
) -> Pomdp:
    """Build a validated ``Pomdp``, raising ``PomdpValidationError`` on failure."""

    try:
        return Pomdp(
            states=tuple(states),
            actions=tuple(actions),
            observations=tuple(observations),
            transitions=_freeze_transitions(transitions),
            observation_of=tuple(observation_of),
            initial=initial,
            goal=goal,
        )
    except ValidationError as e:
        raise PomdpValidationError(validation_error_message(e)) from e


def make_targeted_pomdp(
    *,
    states: Sequence[Text],
    actions: Sequence[Text],
    observations: Sequence[Text],
    transitions: Sequence[Sequence[Distribution]],
    observation_of: Sequence[int],
    initial: int,
    targets: Iterable[int],
) -> TargetedPomdp:
    try:
        return TargetedPomdp(
            states=tuple(states),
            actions=tuple(actions),
            observations=tuple(observations),
            transitions=_freeze_transitions(transitions),
            observation_of=tuple(observation_of),
            initial=initial,
            targets=frozenset(targets),
        )
    except ValidationError as e:
        raise PomdpValidationError(validation_error_message(e)) from e


def _freeze_transitions(
    transitions: Sequence[Sequence[Distribution]],
) -> Tuple[Tuple[Distribution, ...], ...]:
    return tuple(
        tuple(tuple(sorted((int(s), float(p)) for s, p in dist)) for dist in row)
        for row in transitions
    )


def fresh_name(base: Text, taken: Iterable[Text]) -> Text:
    taken_set = set(taken)
    if base not in taken_set:
        return base
    i = 1
    while f"{base}_{i}" in taken_set:
        i += 1
    return f"{base}_{i}"


def support_successors(pomdp: Pomdp, state: int, action: int) -> Tuple[int, ...]:
    return pomdp.supports[state][action]


def observation_classes(pomdp: Union[Pomdp, TargetedPomdp]) -> ObservationClasses:
    """Partition states by observation, class ids in order of first occurrence."""

    class_id_of_observation: Dict[int, int] = {}
    members: List[List[int]] = []
    class_of: List[int] = []
    for s, z in enumerate(pomdp.observation_of):
        if z not in class_id_of_observation:
            class_id_of_observation[z] = len(members)
            members.append([])
        cid = class_id_of_observation[z]
        members[cid].append(s)
        class_of.append(cid)
    observation_of_class = [0] * len(members)
    for z, cid in class_id_of_observation.items():
        observation_of_class[cid] = z
    return ObservationClasses(
        classes=tuple(tuple(m) for m in members),
        class_of=tuple(class_of),
        observation_of_class=tuple(observation_of_class),
    )


def normalize_goal(
    pomdp: Union[Pomdp, TargetedPomdp], targets: Optional[Iterable[int]] = None
) -> Pomdp:
    """Collapse a target set into a single absorbing goal state.

    A single absorbing target whose observation no other state carries is kept
    as the goal. Otherwise a fresh goal state with a fresh observation is added
    and every target is redirected into it under all actions.
    """

    if targets is not None:
        target_set = frozenset(targets)
    elif isinstance(pomdp, Pomdp):
        target_set = frozenset({pomdp.goal})
    else:
        target_set = pomdp.targets
    if not target_set:
        raise PomdpValidationError("Target set is empty")

    if len(target_set) == 1:
        (t,) = tuple(target_set)
        dedicated = len(pomdp.states_with_observation(pomdp.observation_of[t])) == 1
        if pomdp.is_absorbing(t) and dedicated:
            if isinstance(pomdp, Pomdp) and pomdp.goal == t:
                return pomdp
            return make_pomdp(
                states=pomdp.states,
                actions=pomdp.actions,
                observations=pomdp.observations,
                transitions=pomdp.transitions,
                observation_of=pomdp.observation_of,
                initial=pomdp.initial,
                goal=t,
            )

    goal = pomdp.num_states
    goal_observation = pomdp.num_observations
    into_goal: Distribution = ((goal, 1.0),)
    transitions = [
        tuple(into_goal for _ in pomdp.actions) if s in target_set else row
        for s, row in enumerate(pomdp.transitions)
    ]
    transitions.append(tuple(into_goal for _ in pomdp.actions))
    names = sorted(pomdp.states[t] for t in target_set)
    logger.debug(f"Redirecting targets {names} into a fresh goal state")
    return make_pomdp(
        states=pomdp.states + (fresh_name("G", pomdp.states),),
        actions=pomdp.actions,
        observations=pomdp.observations
        + (fresh_name("goal", pomdp.observations),),
        transitions=transitions,
        observation_of=pomdp.observation_of + (goal_observation,),
        initial=pomdp.initial,
        goal=goal,
    )


def perturb_probabilities(
    pomdp: Pomdp, seed: int = 0, low: float = 0.5, high: float = 2.0
) -> Pomdp:
    """Rescale every positive probability by a random factor, keeping supports."""

    rng = np.random.default_rng(seed)
    transitions = []
    for row in pomdp.transitions:
        new_row = []
        for dist in row:
            succ = [s for s, _ in dist]
            weights = np.array([p for _, p in dist]) * rng.uniform(
                low, high, size=len(dist)
            )
            weights = weights / weights.sum()
            new_row.append(tuple(zip(succ, weights.tolist())))
        transitions.append(tuple(new_row))
    return make_pomdp(
        states=pomdp.states,
        actions=pomdp.actions,
        observations=pomdp.observations,
        transitions=transitions,
        observation_of=pomdp.observation_of,
        initial=pomdp.initial,
        goal=pomdp.goal,
    )
