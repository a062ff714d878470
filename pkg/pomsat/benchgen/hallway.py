from typing import Text

from pomsat.benchgen.builder import PomdpBuilder
from pomsat.benchgen.grid import DIRECTIONS, Grid, opposite, turn_left, turn_right
from pomsat.config import logger
from pomsat.exceptions import InvalidGeometry
from pomsat.types.benchgen import Cell, HallwayParams
from pomsat.types.pomdp import Pomdp

HALLWAY_ACTIONS = ("forward", "left", "right")


def _check_geometry(params: HallwayParams, grid: Grid) -> None:
    for what, cells in (("Barrier", params.barriers), ("Trap", params.traps)):
        for cell in cells:
            grid.require(_rc(cell), what)
    if params.barriers & params.traps:
        raise InvalidGeometry("A cell cannot be both a barrier and a trap")
    grid.require(_rc(params.goal), "Goal")
    if params.goal in params.barriers or params.goal in params.traps:
        raise InvalidGeometry(f"Goal {params.goal} is a barrier or a trap")
    for cell in params.initial:
        grid.require(_rc(cell), "Initial cell")
        if cell in params.barriers or cell in params.traps:
            raise InvalidGeometry(f"Initial cell {cell} is a barrier or a trap")


def _rc(cell: Cell) -> Cell:
    x, y = cell
    return (y, x)


def _state_name(cell: Cell, direction: Text) -> Text:
    return f"{cell[0]}_{cell[1]}{direction}"


def gen_hallway(params: HallwayParams) -> Pomdp:
    """Generate a hallway navigation POMDP.

    The robot occupies a cell with an orientation and senses, relative to its
    orientation, whether there is a wall in front, left, behind and right.
    Barriers and the grid border are walls, traps are not visible. Every
    action fails with ``fail_prob``, leaving the state unchanged. A ``start``
    state spreads uniformly over the initial cells, facing south.
    """

    grid = Grid(params.height, params.width)
    _check_geometry(params, grid)
    free = [
        (x, y)
        for (y, x) in grid.cells()
        if (x, y) not in params.barriers
        and (x, y) not in params.traps
        and (x, y) != params.goal
    ]

    def is_wall(cell: Cell, direction: Text) -> bool:
        target = grid.step(_rc(cell), direction)
        return target is None or _rc(target) in params.barriers

    def observation(cell: Cell, facing: Text) -> Text:
        sensed = (facing, turn_left(facing), opposite(facing), turn_right(facing))
        return "w" + "".join("1" if is_wall(cell, d) else "0" for d in sensed)

    builder = PomdpBuilder(HALLWAY_ACTIONS)
    start = builder.add_state("start", "start")
    for cell in free:
        for d in DIRECTIONS:
            builder.add_state(_state_name(cell, d), observation(cell, d))
    lost = builder.add_state("lost", "lost")
    goal = builder.add_state("G", "goal")
    builder.self_loop(lost)
    builder.self_loop(goal)

    def occupy(cell: Cell, facing: Text) -> int:
        if cell == params.goal:
            return goal
        if cell in params.traps:
            return lost
        return builder.state(_state_name(cell, facing))

    p_fail = params.fail_prob
    forward, left, right = range(3)
    for cell in free:
        for d in DIRECTIONS:
            s = builder.state(_state_name(cell, d))
            target = grid.step(_rc(cell), d)
            if target is None or _rc(target) in params.barriers:
                builder.add_transition(s, forward, s, 1.0)
            else:
                builder.add_transition(s, forward, occupy(_rc(target), d), 1 - p_fail)
                builder.add_transition(s, forward, s, p_fail)
            for action, turned in ((left, turn_left(d)), (right, turn_right(d))):
                builder.add_transition(
                    s, action, builder.state(_state_name(cell, turned)), 1 - p_fail
                )
                builder.add_transition(s, action, s, p_fail)

    share = 1.0 / len(params.initial)
    for cell in sorted(params.initial):
        for a in range(len(HALLWAY_ACTIONS)):
            builder.add_transition(start, a, occupy(cell, "S"), share)

    pomdp = builder.build(initial=start, goal=goal)
    logger.debug(
        f"Hallway {params.width}x{params.height}: {pomdp.num_states} states, "
        + f"{pomdp.num_observations} observations"
    )
    return pomdp
