from collections import defaultdict
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Text, Tuple

from pomsat.config import logger, settings
from pomsat.exceptions import EnumerationCapExceeded, VerificationFailed
from pomsat.strategy.verify import verify_almost_sure
from pomsat.types.pomdp import Pomdp
from pomsat.types.strategy import FiniteMemoryStrategy, Node

# ("act", (key,)) or ("upd", (m, z, a))
Choice = Tuple[Text, Tuple[int, ...]]


def nonempty_subsets(n: int) -> List[FrozenSet[int]]:
    return [
        frozenset(i for i in range(n) if mask >> i & 1) for mask in range(1, 1 << n)
    ]


def _backward_closure(
    edges: Dict[Node, Set[Node]], sources: Iterable[Node]
) -> Set[Node]:
    reverse: Dict[Node, List[Node]] = defaultdict(list)
    for u, targets in edges.items():
        for v in targets:
            reverse[v].append(u)
    closure = set(sources)
    stack = list(closure)
    while stack:
        v = stack.pop()
        for u in reverse[v]:
            if u not in closure:
                closure.add(u)
                stack.append(u)
    return closure


class _LazyEnumeration:
    """Depth-first enumeration of support-only strategies.

    Supports are chosen only for the contexts the partial candidate reaches
    from ``(I, m0)``. A partial candidate is abandoned as soon as a reached
    node can reach neither a goal node nor a node with an open choice, since
    every completion keeps that node reachable and losing.
    """

    def __init__(self, p: Pomdp, mu: int, observation_based: bool, cap: int):
        self.p = p
        self.mu = mu
        self.observation_based = observation_based
        self.cap = cap
        self.visited = 0
        self.act: Dict[int, FrozenSet[int]] = {}
        self.upd: Dict[Tuple[int, int, int], FrozenSet[int]] = {}
        self.action_options = nonempty_subsets(p.num_actions)
        self.memory_options = nonempty_subsets(mu)
        goal_observation = p.observation_of[p.goal]
        self.free_observations = (
            {goal_observation}
            if p.states_with_observation(goal_observation) == (p.goal,)
            else set()
        )

    def _explore(
        self,
    ) -> Tuple[List[Node], Dict[Node, Set[Node]], Set[Node], Optional[Choice]]:
        p = self.p
        initial = (p.initial, 0)
        order = [initial]
        seen = {initial}
        edges: Dict[Node, Set[Node]] = {}
        open_nodes: Set[Node] = set()
        first_open: Optional[Choice] = None
        i = 0
        while i < len(order):
            node = order[i]
            i += 1
            s, m = node
            targets: Set[Node] = set()
            edges[node] = targets
            if s == p.goal:
                continue
            key = p.observation_of[s] if self.observation_based else m
            support = self.act.get(key)
            if support is None:
                open_nodes.add(node)
                first_open = first_open or ("act", (key,))
                continue
            for a in sorted(support):
                for succ in p.supports[s][a]:
                    z = p.observation_of[succ]
                    if self.mu == 1 or z in self.free_observations:
                        next_memories: Iterable[int] = (0,)
                    else:
                        context = (m, z, a)
                        if context not in self.upd:
                            open_nodes.add(node)
                            first_open = first_open or ("upd", context)
                            continue
                        next_memories = sorted(self.upd[context])
                    for m2 in next_memories:
                        target = (succ, m2)
                        targets.add(target)
                        if target not in seen:
                            seen.add(target)
                            order.append(target)
        return order, edges, open_nodes, first_open

    def search(self) -> bool:
        self.visited += 1
        if self.visited > self.cap:
            raise EnumerationCapExceeded(
                f"Brute-force enumeration exceeded {self.cap} candidates"
            )
        order, edges, open_nodes, choice = self._explore()
        goal_nodes = [node for node in order if node[0] == self.p.goal]
        alive = _backward_closure(edges, goal_nodes + sorted(open_nodes))
        if any(node not in alive for node in order):
            return False
        if choice is None:
            return True

        kind, args = choice
        if kind == "act":
            for option in self.action_options:
                self.act[args[0]] = option
                if self.search():
                    return True
            del self.act[args[0]]
        else:
            context = (args[0], args[1], args[2])
            for option in self.memory_options:
                self.upd[context] = option
                if self.search():
                    return True
            del self.upd[context]
        return False

    def witness(self) -> FiniteMemoryStrategy:
        p = self.p
        default = frozenset({0})
        if self.observation_based:
            observation_support = {
                z: self.act.get(z, default) for z in range(p.num_observations)
            }
            return FiniteMemoryStrategy(
                mu=1,
                num_observations=p.num_observations,
                num_actions=p.num_actions,
                observation_support=observation_support,
                deterministic=all(len(s) == 1 for s in observation_support.values()),
            )
        action_support = tuple(self.act.get(m, default) for m in range(self.mu))
        update_support = tuple(
            tuple(
                tuple(self.upd.get((m, z, a), default) for a in range(p.num_actions))
                for z in range(p.num_observations)
            )
            for m in range(self.mu)
        )
        supports = list(action_support) + [
            s for by_obs in update_support for by_act in by_obs for s in by_act
        ]
        return FiniteMemoryStrategy(
            mu=self.mu,
            num_observations=p.num_observations,
            num_actions=p.num_actions,
            action_support=action_support,
            update_support=update_support,
            deterministic=all(len(s) == 1 for s in supports),
        )


def brute_force_search(
    p: Pomdp,
    mu: int,
    *,
    observation_based: Optional[bool] = None,
    cap: Optional[int] = None,
) -> Optional[FiniteMemoryStrategy]:
    """Find a winning support-only strategy by enumeration, or ``None``.

    ``mu == 1`` enumerates observation-based strategies unless
    ``observation_based`` is false. ``cap`` bounds the number of visited
    candidates, ``EnumerationCapExceeded`` is raised beyond it.
    """

    if mu < 1:
        raise ValueError(f"mu must be positive, got {mu}")
    if observation_based is None:
        observation_based = mu == 1
    if observation_based and mu != 1:
        raise ValueError("Observation-based enumeration requires mu = 1")
    enumeration = _LazyEnumeration(
        p, mu, observation_based, settings.brute_force_cap if cap is None else cap
    )
    found = enumeration.search()
    logger.debug(
        f"Brute force mu={mu} visited {enumeration.visited} candidates, "
        + f"{'found' if found else 'no'} winning strategy"
    )
    if not found:
        return None
    strategy = enumeration.witness()
    if not verify_almost_sure(p, strategy).winning:
        raise VerificationFailed("Brute-force witness rejected by the verifier")
    return strategy


def brute_force_exists(
    p: Pomdp,
    mu: int,
    *,
    observation_based: Optional[bool] = None,
    cap: Optional[int] = None,
) -> bool:
    return (
        brute_force_search(p, mu, observation_based=observation_based, cap=cap)
        is not None
    )
