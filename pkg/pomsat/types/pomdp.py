from functools import cached_property
from typing import Dict, FrozenSet, Sequence, Text, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from pomsat.config import settings

# A distribution over successor states: ((state, probability), ...), sorted by state.
Distribution = Tuple[Tuple[int, float], ...]


def _check_unique(names: Sequence[Text], what: Text) -> None:
    seen = set()
    for name in names:
        if name in seen:
            raise ValueError(f"Duplicate {what} name '{name}'")
        seen.add(name)


class _PomdpStructure(BaseModel):
    model_config = ConfigDict(frozen=True)

    states: Tuple[Text, ...] = Field(..., min_length=1)
    actions: Tuple[Text, ...] = Field(..., min_length=1)
    observations: Tuple[Text, ...] = Field(..., min_length=1)
    transitions: Tuple[Tuple[Distribution, ...], ...]
    observation_of: Tuple[int, ...]
    initial: int

    @model_validator(mode="after")
    def _check_structure(self):
        _check_unique(self.states, "state")
        _check_unique(self.actions, "action")
        _check_unique(self.observations, "observation")

        n_states = len(self.states)
        n_actions = len(self.actions)
        tolerance = settings.probability_tolerance
        if len(self.transitions) != n_states:
            raise ValueError(
                f"Transition table has {len(self.transitions)} rows "
                + f"but there are {n_states} states"
            )
        for s, row in enumerate(self.transitions):
            if len(row) != n_actions:
                raise ValueError(
                    f"State '{self.states[s]}' defines {len(row)} actions, "
                    + f"expected {n_actions}"
                )
            for a, dist in enumerate(row):
                where = f"({self.states[s]}, {self.actions[a]})"
                if not dist:
                    raise ValueError(f"No transitions for {where}")
                successors = [succ for succ, _ in dist]
                if len(set(successors)) != len(successors):
                    raise ValueError(f"Duplicate successor in {where}")
                total = 0.0
                for succ, prob in dist:
                    if not 0 <= succ < n_states:
                        raise ValueError(f"Unknown successor {succ} in {where}")
                    if not 0.0 < prob <= 1.0 + tolerance:
                        raise ValueError(f"Probability {prob} out of range in {where}")
                    total += prob
                if abs(total - 1.0) > tolerance:
                    raise ValueError(f"Probabilities of {where} sum to {total:g}")

        if len(self.observation_of) != n_states:
            raise ValueError(
                f"Observation function covers {len(self.observation_of)} states, "
                + f"expected {n_states}"
            )
        for s, z in enumerate(self.observation_of):
            if not 0 <= z < len(self.observations):
                raise ValueError(f"Unknown observation {z} of '{self.states[s]}'")
        if not 0 <= self.initial < n_states:
            raise ValueError(f"Initial state {self.initial} out of range")
        return self

    @property
    def num_states(self) -> int:
        return len(self.states)

    @property
    def num_actions(self) -> int:
        return len(self.actions)

    @property
    def num_observations(self) -> int:
        return len(self.observations)

    @cached_property
    def supports(self) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
        """Successor supports, ``supports[s][a]`` sorted ascending."""

        return tuple(
            tuple(tuple(sorted(succ for succ, _ in dist)) for dist in row)
            for row in self.transitions
        )

    @cached_property
    def state_index(self) -> Dict[Text, int]:
        return {name: i for i, name in enumerate(self.states)}

    @cached_property
    def action_index(self) -> Dict[Text, int]:
        return {name: i for i, name in enumerate(self.actions)}

    @cached_property
    def observation_index(self) -> Dict[Text, int]:
        return {name: i for i, name in enumerate(self.observations)}

    def is_absorbing(self, state: int) -> bool:
        return all(support == (state,) for support in self.supports[state])

    def states_with_observation(self, observation: int) -> Tuple[int, ...]:
        return tuple(
            s for s, z in enumerate(self.observation_of) if z == observation
        )


class Pomdp(_PomdpStructure):
    """A finite POMDP with a single absorbing goal state."""

    goal: int

    @model_validator(mode="after")
    def _check_goal(self):
        if not 0 <= self.goal < len(self.states):
            raise ValueError(f"Goal state {self.goal} out of range")
        if not self.is_absorbing(self.goal):
            raise ValueError(f"Goal state '{self.states[self.goal]}' is not absorbing")
        return self


class TargetedPomdp(_PomdpStructure):
    """A POMDP whose objective is a set of target states, before normalization."""

    targets: FrozenSet[int] = Field(..., min_length=1)

    @model_validator(mode="after")
    def _check_targets(self):
        for t in self.targets:
            if not 0 <= t < len(self.states):
                raise ValueError(f"Target state {t} out of range")
        return self


class ObservationClasses(BaseModel):
    model_config = ConfigDict(frozen=True)

    classes: Tuple[Tuple[int, ...], ...]
    class_of: Tuple[int, ...]
    observation_of_class: Tuple[int, ...]

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def representative(self, class_id: int) -> int:
        return self.classes[class_id][0]
