from typing import Dict, FrozenSet, List, Optional, Text, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

Support = FrozenSet[int]
Node = Tuple[int, int]


class FiniteMemoryStrategy(BaseModel):
    """A support-only strategy with ``mu`` memory states.

    Memory-based strategies pick actions from ``action_support[m]``.
    Observation-based strategies (``mu == 1``) pick actions from
    ``observation_support[z]`` for the current observation instead.
    ``update_support[m][z][a]`` holds the possible next memory states after
    playing ``a`` and observing ``z`` at the successor. Probabilities are
    uniform over each support.
    """

    model_config = ConfigDict(frozen=True)

    mu: int = Field(..., ge=1)
    m0: int = Field(default=0, ge=0)
    num_observations: int = Field(..., ge=1)
    num_actions: int = Field(..., ge=1)
    action_support: Tuple[Support, ...] = ()
    observation_support: Optional[Dict[int, Support]] = None
    update_support: Tuple[Tuple[Tuple[Support, ...], ...], ...] = ()
    deterministic: bool = False

    @model_validator(mode="after")
    def _check_shape(self):
        if self.m0 >= self.mu:
            raise ValueError(f"Initial memory {self.m0} out of range")
        if self.observation_support is not None:
            if self.action_support:
                raise ValueError("Give either action_support or observation_support")
            if self.mu != 1:
                raise ValueError("Observation-based strategies have mu = 1")
            if set(self.observation_support) != set(range(self.num_observations)):
                raise ValueError("observation_support must cover every observation")
            supports: List[Support] = list(self.observation_support.values())
        else:
            if len(self.action_support) != self.mu:
                raise ValueError(
                    f"Expected {self.mu} action supports, "
                    + f"got {len(self.action_support)}"
                )
            supports = list(self.action_support)
        for support in supports:
            self._check_support(support, self.num_actions, "action")

        if self.update_support or self.mu > 1 or self.observation_support is None:
            if len(self.update_support) != self.mu or any(
                len(by_obs) != self.num_observations
                or any(len(by_act) != self.num_actions for by_act in by_obs)
                for by_obs in self.update_support
            ):
                raise ValueError("update_support must have shape mu x |Z| x |A|")
            for by_obs in self.update_support:
                for by_act in by_obs:
                    for support in by_act:
                        self._check_support(support, self.mu, "memory")
                        supports.append(support)

        if self.deterministic and any(len(s) != 1 for s in supports):
            raise ValueError("A deterministic strategy has singleton supports")
        return self

    @staticmethod
    def _check_support(support: Support, bound: int, what: Text) -> None:
        if not support:
            raise ValueError(f"Empty {what} support")
        for x in support:
            if not 0 <= x < bound:
                raise ValueError(f"{what.capitalize()} {x} out of range 0..{bound - 1}")

    @property
    def is_observation_based(self) -> bool:
        return self.observation_support is not None

    def actions_at(self, memory: int, observation: int) -> Support:
        if self.observation_support is not None:
            return self.observation_support[observation]
        return self.action_support[memory]

    def memory_successors(self, memory: int, observation: int, action: int) -> Support:
        if not self.update_support:
            return frozenset({0})
        return self.update_support[memory][observation][action]


class VerificationResult(BaseModel):
    winning: bool
    counterexample: Optional[Node] = None
    reachable_nodes: int = 0

    def describe(self, state_names: Tuple[Text, ...]) -> Text:
        if self.winning or self.counterexample is None:
            return f"winning ({self.reachable_nodes} reachable nodes)"
        s, m = self.counterexample
        return f"losing: ({state_names[s]}, m{m}) is reachable but cannot reach goal"
