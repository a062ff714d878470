from pomsat.benchgen.escape import ESCAPE_ACTIONS, gen_escape
from pomsat.benchgen.fixtures import (
    ESCAPE_CORRIDOR,
    ESCAPE_FIXTURE,
    HALLWAY_FIXTURE,
    ROCKSAMPLE_FIXTURE,
)
from pomsat.benchgen.hallway import HALLWAY_ACTIONS, gen_hallway
from pomsat.benchgen.random_pomdp import random_corpus, random_pomdp
from pomsat.benchgen.rocksample import ROCKSAMPLE_ACTIONS, gen_rocksample

__all__ = [
    "ESCAPE_ACTIONS",
    "ESCAPE_CORRIDOR",
    "ESCAPE_FIXTURE",
    "HALLWAY_FIXTURE",
    "HALLWAY_ACTIONS",
    "ROCKSAMPLE_ACTIONS",
    "ROCKSAMPLE_FIXTURE",
    "gen_escape",
    "gen_hallway",
    "gen_rocksample",
    "random_corpus",
    "random_pomdp",
]
