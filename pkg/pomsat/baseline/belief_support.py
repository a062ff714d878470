from collections import deque
from typing import Dict, FrozenSet, List, Optional, Text, Tuple

import networkx as nx

from pomsat.config import logger, settings
from pomsat.exceptions import NodeCapExceeded
from pomsat.pomdp import normalize_goal
from pomsat.types.pomdp import Pomdp

BeliefSupport = FrozenSet[int]


class BeliefSupportMdp:
    """The MDP over belief supports reachable from ``{I}``.

    Taking action ``a`` in support ``B`` leads to one successor support per
    observation, the successors of ``B`` under ``a`` carrying it. Nodes are
    numbered in discovery order, the initial support is node 0.
    """

    def __init__(self, p: Pomdp):
        self.pomdp = p
        self.nodes: List[BeliefSupport] = []
        self.index: Dict[BeliefSupport, int] = {}
        self.successors: Dict[Tuple[int, int], FrozenSet[int]] = {}

    @property
    def num_nodes(self) -> int:
        return len(self.nodes)

    @property
    def initial(self) -> int:
        return 0

    @property
    def targets(self) -> FrozenSet[int]:
        goal_only = frozenset({self.pomdp.goal})
        return frozenset(i for i, b in enumerate(self.nodes) if b == goal_only)

    def add_node(self, support: BeliefSupport) -> Tuple[int, bool]:
        if support in self.index:
            return self.index[support], False
        self.index[support] = len(self.nodes)
        self.nodes.append(support)
        return self.index[support], True

    def post(self, support: BeliefSupport, action: int) -> List[BeliefSupport]:
        p = self.pomdp
        by_observation: Dict[int, set] = {}
        for s in support:
            for succ in p.supports[s][action]:
                by_observation.setdefault(p.observation_of[succ], set()).add(succ)
        return [frozenset(by_observation[z]) for z in sorted(by_observation)]

    def graph(self, nodes=None, allowed=None) -> nx.DiGraph:
        """The graph of the MDP restricted to ``nodes`` and ``allowed`` actions."""

        nodes = range(self.num_nodes) if nodes is None else nodes
        graph = nx.DiGraph()
        graph.add_nodes_from(nodes)
        for n in nodes:
            actions = (
                range(self.pomdp.num_actions) if allowed is None else allowed[n]
            )
            for a in actions:
                for succ in self.successors[(n, a)]:
                    graph.add_edge(n, succ)
        return graph

    def describe(self, node: int) -> Text:
        names = sorted(self.pomdp.states[s] for s in self.nodes[node])
        return "{" + ",".join(names) + "}"


def build_belief_support(
    p: Pomdp, node_cap: Optional[int] = None
) -> BeliefSupportMdp:
    """Build the belief-support MDP forward from the initial support."""

    node_cap = settings.belief_node_cap if node_cap is None else node_cap
    p = normalize_goal(p)
    mdp = BeliefSupportMdp(p)
    mdp.add_node(frozenset({p.initial}))
    queue = deque([0])
    while queue:
        n = queue.popleft()
        support = mdp.nodes[n]
        for a in range(p.num_actions):
            targets = []
            for succ_support in mdp.post(support, a):
                succ, new = mdp.add_node(succ_support)
                if new:
                    if mdp.num_nodes > node_cap:
                        raise NodeCapExceeded(
                            f"Belief-support MDP exceeds {node_cap} nodes"
                        )
                    queue.append(succ)
                targets.append(succ)
            mdp.successors[(n, a)] = frozenset(targets)
    logger.debug(f"Belief-support MDP has {mdp.num_nodes} nodes")
    return mdp


def dump_belief_support(mdp: BeliefSupportMdp) -> Text:
    p = mdp.pomdp
    lines = [f"nodes: {mdp.num_nodes}", f"init: n{mdp.initial}"]
    lines.append("targets: " + " ".join(f"n{t}" for t in sorted(mdp.targets)))
    for n in range(mdp.num_nodes):
        lines.append(f"node: n{n} {mdp.describe(n)}")
    for n in range(mdp.num_nodes):
        for a in range(p.num_actions):
            succ = " ".join(f"n{s}" for s in sorted(mdp.successors[(n, a)]))
            lines.append(f"trans: n{n} {p.actions[a]} {succ}")
    return "\n".join(lines) + "\n"
