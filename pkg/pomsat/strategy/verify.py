from pomsat.config import logger
from pomsat.strategy.product import build_product_graph
from pomsat.types.pomdp import Pomdp
from pomsat.types.strategy import FiniteMemoryStrategy, VerificationResult


def verify_almost_sure(p: Pomdp, strategy: FiniteMemoryStrategy) -> VerificationResult:
    """Decide whether ``strategy`` reaches the goal with probability 1.

    It does iff every product node reachable from ``(I, m0)`` can still reach
    a goal node. Otherwise the failing node that sorts first by
    ``(state name, memory)`` is reported.
    """

    product = build_product_graph(p, strategy)
    reachable = product.reachable
    failing = [node for node in reachable if node not in product.can_reach_goal]
    if not failing:
        return VerificationResult(winning=True, reachable_nodes=len(reachable))
    counterexample = min(failing, key=lambda node: (p.states[node[0]], node[1]))
    logger.debug(
        f"Strategy loses: {len(failing)} of {len(reachable)} reachable nodes "
        + f"cannot reach the goal, e.g. ({p.states[counterexample[0]]}, "
        + f"m{counterexample[1]})"
    )
    return VerificationResult(
        winning=False, counterexample=counterexample, reachable_nodes=len(reachable)
    )
