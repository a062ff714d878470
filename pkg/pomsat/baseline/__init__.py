from pomsat.baseline.almost_sure import (
    BaselineResult,
    baseline_decide,
    mdp_almost_sure_reach,
)
from pomsat.baseline.belief_support import (
    BeliefSupportMdp,
    build_belief_support,
    dump_belief_support,
)

__all__ = [
    "BaselineResult",
    "BeliefSupportMdp",
    "baseline_decide",
    "build_belief_support",
    "dump_belief_support",
    "mdp_almost_sure_reach",
]
