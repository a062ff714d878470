from typing import Dict, Text

from pomsat.benchgen.builder import PomdpBuilder
from pomsat.benchgen.grid import DIRECTIONS, Grid, cell_name
from pomsat.config import logger
from pomsat.exceptions import InvalidGeometry
from pomsat.types.benchgen import Cell, EscapeParams
from pomsat.types.pomdp import Pomdp

ESCAPE_ACTIONS = DIRECTIONS


def _state_name(robot: Cell, agent: Cell) -> Text:
    return f"r{cell_name(robot)}a{cell_name(agent)}"


def gen_escape(params: EscapeParams) -> Pomdp:
    """Generate the escape POMDP.

    Each round the goal is entered with ``escape_prob``. Otherwise the robot
    moves (moves into the border keep it in place) and then the agent steps
    to a uniformly chosen neighbouring cell. Meeting the agent in either half
    of the round is a capture. The robot observes its own wall pattern and
    the direction of the agent when the agent is adjacent.

    Avoiding capture forever becomes reaching the goal almost surely: every
    capture-free round leaves with positive probability.
    """

    grid = Grid(params.num_rows, params.n)
    grid.require(params.robot, "Robot")
    grid.require(params.agent, "Agent")
    if params.robot == params.agent:
        raise InvalidGeometry("Robot and agent must start on distinct cells")

    def observation(robot: Cell, agent: Cell) -> Text:
        walls = "".join("1" if grid.step(robot, d) is None else "0" for d in DIRECTIONS)
        return f"w{walls}_{grid.direction_to(robot, agent) or 'x'}"

    builder = PomdpBuilder(ESCAPE_ACTIONS)
    cells = list(grid.cells())
    for robot in cells:
        for agent in cells:
            if robot != agent:
                builder.add_state(_state_name(robot, agent), observation(robot, agent))
    capture = builder.add_state("capture", "capture")
    goal = builder.add_state("G", "goal")
    builder.self_loop(capture)
    builder.self_loop(goal)

    q = params.escape_prob
    for robot in cells:
        for agent in cells:
            if robot == agent:
                continue
            s = builder.state(_state_name(robot, agent))
            for a, direction in enumerate(ESCAPE_ACTIONS):
                builder.add_transition(s, a, goal, q)
                moved = grid.step(robot, direction) or robot
                if moved == agent:
                    builder.add_transition(s, a, capture, 1 - q)
                    continue
                agent_moves = grid.neighbours(agent)
                weights: Dict[int, float] = {}
                for target in agent_moves:
                    succ = (
                        capture
                        if target == moved
                        else builder.state(_state_name(moved, target))
                    )
                    weights[succ] = weights.get(succ, 0.0) + 1.0 / len(agent_moves)
                for succ, weight in weights.items():
                    builder.add_transition(s, a, succ, (1 - q) * weight)

    pomdp = builder.build(
        initial=builder.state(_state_name(params.robot, params.agent)), goal=goal
    )
    logger.debug(
        f"Escape {params.num_rows}x{params.n}: {pomdp.num_states} states, "
        + f"{pomdp.num_observations} observations"
    )
    return pomdp
