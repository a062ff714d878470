from typing import Final

from pomsat.types.benchgen import EscapeParams, HallwayParams, RockSampleParams

# A corridor leading north to the goal. Telling apart the two cells that
# sense a wall on the right needs one bit of memory.
HALLWAY_FIXTURE: Final[HallwayParams] = HallwayParams(
    width=3,
    height=4,
    barriers=frozenset({(0, 0), (2, 0), (0, 1), (2, 2)}),
    traps=frozenset({(2, 1), (0, 2), (0, 3), (2, 3)}),
    goal=(1, 0),
    initial=frozenset({(1, 3)}),
    fail_prob=0.1,
)

ESCAPE_FIXTURE: Final[EscapeParams] = EscapeParams(n=3, robot=(0, 0), agent=(2, 2))

ESCAPE_CORRIDOR: Final[EscapeParams] = EscapeParams(
    n=3, rows=1, robot=(0, 0), agent=(0, 1)
)

ROCKSAMPLE_FIXTURE: Final[RockSampleParams] = RockSampleParams(
    rocks=((1, 1), (1, 2)), rock_types=("good", "good"), rover=(0, 0)
)
