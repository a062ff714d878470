import itertools
from collections import deque
from typing import Dict, List, Text, Tuple, Union

from pomsat.benchgen.builder import PomdpBuilder
from pomsat.benchgen.grid import Grid, cell_name
from pomsat.config import logger
from pomsat.exceptions import InvalidGeometry
from pomsat.types.benchgen import Cell, RockSampleParams
from pomsat.types.pomdp import Pomdp

ROCKSAMPLE_ACTIONS = ("N", "S", "E", "W", "sample")
SAMPLES_NEEDED = 2

# Rock status: b(ad), g(ood) or s(ampled, good).
RoverState = Tuple[Cell, Tuple[Text, ...], bool]
Successor = Union[RoverState, Text]


def _check_geometry(params: RockSampleParams, grid: Grid) -> None:
    if len(params.rock_types) != params.n:
        raise InvalidGeometry(
            f"Got {len(params.rock_types)} rock types for {params.n} rocks"
        )
    if len(set(params.rocks)) != params.n:
        raise InvalidGeometry("Rock positions must be distinct")
    for rock in params.rocks:
        grid.require(rock, "Rock")
    grid.require(params.rover, "Rover")
    if params.rover in params.rocks:
        raise InvalidGeometry("The rover cannot start on a rock")


def _state_name(state: RoverState) -> Text:
    cell, statuses, fresh = state
    return f"{cell_name(cell)}_{''.join(statuses)}{'_f' if fresh else ''}"


class _RockWorld:
    def __init__(self, params: RockSampleParams):
        self.grid = Grid(params.size, params.size)
        _check_geometry(params, self.grid)
        self.params = params
        self.rock_at: Dict[Cell, int] = {cell: i for i, cell in enumerate(params.rocks)}

    def initial_states(self) -> List[RoverState]:
        choices = [
            ("g", "b") if t == "unknown" else (t[0],) for t in self.params.rock_types
        ]
        return [
            (self.params.rover, statuses, False)
            for statuses in itertools.product(*choices)
        ]

    def observation(self, state: RoverState) -> Text:
        cell, statuses, fresh = state
        if not fresh:
            return f"at{cell_name(cell)}"
        rock_type = "bad" if statuses[self.rock_at[cell]] == "b" else "good"
        return f"at{cell_name(cell)}_{rock_type}"

    def successors(
        self, state: RoverState, action: Text
    ) -> List[Tuple[Successor, float]]:
        cell, statuses, _ = state
        if action != "sample":
            target = self.grid.step(cell, action) or cell
            fresh = target != cell and target in self.rock_at
            return [((target, statuses, fresh), 1.0)]
        if cell not in self.rock_at:
            return [((cell, statuses, False), 1.0)]
        i = self.rock_at[cell]
        status = statuses[i]
        if status == "b":
            return [("lost", 1.0)]
        if status == "g":
            sampled = statuses[:i] + ("s",) + statuses[i + 1 :]
            if sampled.count("s") >= SAMPLES_NEEDED:
                return [("G", 1.0)]
            return [((cell, sampled, False), 1.0)]
        # Re-sampling destroys the earlier sample half of the time.
        reverted = statuses[:i] + ("g",) + statuses[i + 1 :]
        return [((cell, statuses, False), 0.5), ((cell, reverted, False), 0.5)]


def gen_rocksample(params: RockSampleParams) -> Pomdp:
    """Generate the rock sampling POMDP.

    The rover knows its position. The type of a rock is sensed only on the
    step the rover enters its cell. Sampling a bad rock destroys the rover,
    two good samples reach the goal. Unknown rock types are drawn uniformly by
    the ``start`` state. Only states reachable from ``start`` are generated.
    """

    world = _RockWorld(params)
    initial = world.initial_states()
    order: List[RoverState] = []
    seen = set(initial)
    queue = deque(initial)
    moves: Dict[RoverState, List[List[Tuple[Successor, float]]]] = {}
    while queue:
        state = queue.popleft()
        order.append(state)
        moves[state] = [world.successors(state, a) for a in ROCKSAMPLE_ACTIONS]
        for outcomes in moves[state]:
            for succ, _ in outcomes:
                if not isinstance(succ, str) and succ not in seen:
                    seen.add(succ)
                    queue.append(succ)

    builder = PomdpBuilder(ROCKSAMPLE_ACTIONS)
    start = builder.add_state("start", "start")
    for state in order:
        builder.add_state(_state_name(state), world.observation(state))
    lost = builder.add_state("lost", "lost")
    goal = builder.add_state("G", "goal")
    builder.self_loop(lost)
    builder.self_loop(goal)
    special = {"lost": lost, "G": goal}

    share = 1.0 / len(initial)
    for state in initial:
        for a in range(len(ROCKSAMPLE_ACTIONS)):
            builder.add_transition(start, a, builder.state(_state_name(state)), share)
    for state in order:
        s = builder.state(_state_name(state))
        for a, outcomes in enumerate(moves[state]):
            for succ, prob in outcomes:
                target = (
                    special[succ]
                    if isinstance(succ, str)
                    else builder.state(_state_name(succ))
                )
                builder.add_transition(s, a, target, prob)

    pomdp = builder.build(initial=start, goal=goal)
    logger.debug(
        f"RockSample with {params.n} rocks: {pomdp.num_states} states, "
        + f"{pomdp.num_observations} observations"
    )
    return pomdp
