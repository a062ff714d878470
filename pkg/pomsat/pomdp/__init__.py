from pomsat.pomdp.core import (
    make_pomdp,
    make_targeted_pomdp,
    normalize_goal,
    observation_classes,
    perturb_probabilities,
    support_successors,
)
from pomsat.pomdp.parser import dump_pomdp, parse_pomdp

__all__ = [
    "dump_pomdp",
    "make_pomdp",
    "make_targeted_pomdp",
    "normalize_goal",
    "observation_classes",
    "parse_pomdp",
    "perturb_probabilities",
    "support_successors",
]
