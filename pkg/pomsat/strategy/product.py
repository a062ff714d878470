from functools import cached_property
from typing import FrozenSet, Set

import networkx as nx

from pomsat.exceptions import DimensionMismatch
from pomsat.types.pomdp import Pomdp
from pomsat.types.strategy import FiniteMemoryStrategy, Node


def check_dimensions(p: Pomdp, strategy: FiniteMemoryStrategy) -> None:
    if strategy.num_actions != p.num_actions:
        raise DimensionMismatch(
            f"Strategy has {strategy.num_actions} actions, model has {p.num_actions}"
        )
    if strategy.num_observations != p.num_observations:
        raise DimensionMismatch(
            f"Strategy has {strategy.num_observations} observations, "
            + f"model has {p.num_observations}"
        )


class ProductGraph:
    """The graph induced by a strategy on (state, memory) pairs.

    There is an edge ``(s, m) -> (s2, m2)`` when some action ``a`` is in the
    support at ``(s, m)``, ``s2`` is a possible successor of ``(s, a)`` and
    ``m2`` is a possible memory update on ``(m, O(s2), a)``. Edges carry the
    set of ``(action, m2)`` labels that realize them.
    """

    def __init__(self, p: Pomdp, strategy: FiniteMemoryStrategy):
        check_dimensions(p, strategy)
        self.pomdp = p
        self.strategy = strategy
        self.initial: Node = (p.initial, strategy.m0)
        self.goal_nodes: FrozenSet[Node] = frozenset(
            (p.goal, m) for m in range(strategy.mu)
        )
        self.graph = nx.DiGraph()
        self._build()

    def _build(self) -> None:
        p, strategy = self.pomdp, self.strategy
        obs = p.observation_of
        for s in range(p.num_states):
            for m in range(strategy.mu):
                node = (s, m)
                self.graph.add_node(node)
                for a in sorted(strategy.actions_at(m, obs[s])):
                    for succ in p.supports[s][a]:
                        for m2 in sorted(strategy.memory_successors(m, obs[succ], a)):
                            target = (succ, m2)
                            if self.graph.has_edge(node, target):
                                self.graph.edges[node, target]["labels"].add((a, m2))
                            else:
                                self.graph.add_edge(node, target, labels={(a, m2)})

    @cached_property
    def reachable(self) -> FrozenSet[Node]:
        return frozenset(nx.descendants(self.graph, self.initial) | {self.initial})

    @cached_property
    def can_reach_goal(self) -> FrozenSet[Node]:
        good: Set[Node] = set(self.goal_nodes)
        for goal_node in self.goal_nodes:
            good |= nx.ancestors(self.graph, goal_node)
        return frozenset(good)


def build_product_graph(p: Pomdp, strategy: FiniteMemoryStrategy) -> ProductGraph:
    return ProductGraph(p, strategy)
