from typing import Dict, List, Sequence, Text

from pomsat.pomdp import make_pomdp
from pomsat.types.pomdp import Pomdp


class PomdpBuilder:
    """Accumulates named states and transitions, then builds a ``Pomdp``.

    Probabilities added twice for the same ``(s, a, s')`` are summed, so
    generators can list moves without merging blocked ones themselves.
    """

    def __init__(self, actions: Sequence[Text]):
        self.actions = list(actions)
        self.states: List[Text] = []
        self.observations: List[Text] = []
        self.observation_of: List[int] = []
        self._state_index: Dict[Text, int] = {}
        self._observation_index: Dict[Text, int] = {}
        self._rows: List[List[Dict[int, float]]] = []

    def __contains__(self, name: Text) -> bool:
        return name in self._state_index

    def add_state(self, name: Text, observation: Text) -> int:
        if name in self._state_index:
            raise ValueError(f"State '{name}' added twice")
        if observation not in self._observation_index:
            self._observation_index[observation] = len(self.observations)
            self.observations.append(observation)
        self._state_index[name] = len(self.states)
        self.states.append(name)
        self.observation_of.append(self._observation_index[observation])
        self._rows.append([{} for _ in self.actions])
        return self._state_index[name]

    def state(self, name: Text) -> int:
        return self._state_index[name]

    def add_transition(self, state: int, action: int, succ: int, prob: float) -> None:
        if prob <= 0.0:
            return
        row = self._rows[state][action]
        row[succ] = row.get(succ, 0.0) + prob

    def self_loop(self, state: int) -> None:
        for a in range(len(self.actions)):
            self.add_transition(state, a, state, 1.0)

    def build(self, initial: int, goal: int) -> Pomdp:
        return make_pomdp(
            states=self.states,
            actions=self.actions,
            observations=self.observations,
            transitions=[
                [tuple(dist.items()) for dist in row] for row in self._rows
            ],
            observation_of=self.observation_of,
            initial=initial,
            goal=goal,
        )
