from typing import FrozenSet, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

Cell = Tuple[int, int]
RockType = Literal["good", "bad", "unknown"]


class HallwayParams(BaseModel):
    """A hallway grid. Cells are ``(x, y)`` with ``y`` growing southwards."""

    model_config = ConfigDict(frozen=True)

    width: int = Field(..., ge=1)
    height: int = Field(..., ge=1)
    barriers: FrozenSet[Cell] = frozenset()
    traps: FrozenSet[Cell] = frozenset()
    goal: Cell
    initial: FrozenSet[Cell] = Field(..., min_length=1)
    fail_prob: float = Field(default=0.1, gt=0.0, lt=1.0)


class EscapeParams(BaseModel):
    """Robot escaping a randomly moving agent. Cells are ``(row, col)``."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(default=3, ge=3, description="Number of grid columns.")
    rows: Optional[int] = Field(default=None, ge=1, description="Defaults to n.")
    robot: Cell = (0, 0)
    agent: Cell = (2, 2)
    escape_prob: float = Field(default=0.1, gt=0.0, lt=1.0)

    @property
    def num_rows(self) -> int:
        return self.n if self.rows is None else self.rows


class RockSampleParams(BaseModel):
    """A rover sampling rocks on a ``size`` x ``size`` grid of ``(row, col)`` cells."""

    model_config = ConfigDict(frozen=True)

    size: int = Field(default=3, ge=1)
    rocks: Tuple[Cell, ...] = Field(..., min_length=2)
    rock_types: Tuple[RockType, ...]
    rover: Cell = (0, 0)

    @property
    def n(self) -> int:
        return len(self.rocks)


class RandomPomdpParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    num_states: int = Field(default=4, ge=2, description="Including the goal.")
    num_actions: int = Field(default=2, ge=1)
    num_observations: int = Field(default=3, ge=2, description="Including 'goal'.")
    max_successors: int = Field(default=3, ge=1)
    seed: int = 0
