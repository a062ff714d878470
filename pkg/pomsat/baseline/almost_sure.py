from typing import Dict, FrozenSet, Iterable, List, Optional, Set

import networkx as nx
from pydantic import BaseModel

from pomsat.baseline.belief_support import BeliefSupportMdp, build_belief_support
from pomsat.config import logger
from pomsat.types.pomdp import Pomdp


class BaselineResult(BaseModel):
    winning: bool
    nodes: int
    winning_nodes: int


def mdp_almost_sure_reach(
    mdp: BeliefSupportMdp, targets: Optional[Iterable[int]] = None
) -> FrozenSet[int]:
    """Nodes from which ``targets`` is reached with probability 1.

    Alternates two steps until nothing changes: drop actions that may leave
    the candidate set, then keep only nodes that can still reach a target
    using the remaining actions.
    """

    target_set = mdp.targets if targets is None else frozenset(targets)
    actions = range(mdp.pomdp.num_actions)
    candidates: Set[int] = set(range(mdp.num_nodes))
    while True:
        allowed: Dict[int, List[int]] = {n: list(actions) for n in candidates}
        changed = True
        while changed:
            changed = False
            for n in sorted(candidates):
                allowed[n] = [
                    a for a in allowed[n] if mdp.successors[(n, a)] <= candidates
                ]
                if not allowed[n] and n not in target_set:
                    candidates.discard(n)
                    changed = True
        graph: nx.DiGraph = mdp.graph(nodes=candidates, allowed=allowed)
        reaching: Set[int] = set()
        for t in target_set & candidates:
            reaching |= nx.ancestors(graph, t) | {t}
        if reaching == candidates:
            return frozenset(candidates)
        candidates = reaching


def baseline_decide(p: Pomdp, node_cap: Optional[int] = None) -> BaselineResult:
    """Decide almost-sure reachability by the explicit belief-support construction."""

    mdp = build_belief_support(p, node_cap=node_cap)
    winning = mdp_almost_sure_reach(mdp)
    result = BaselineResult(
        winning=mdp.initial in winning,
        nodes=mdp.num_nodes,
        winning_nodes=len(winning),
    )
    logger.info(
        f"Baseline: {'winning' if result.winning else 'losing'} "
        + f"({result.winning_nodes}/{result.nodes} winning belief supports)"
    )
    return result
