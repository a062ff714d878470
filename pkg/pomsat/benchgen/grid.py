from typing import Dict, Iterator, Optional, Text, Tuple

from pomsat.exceptions import InvalidGeometry
from pomsat.types.benchgen import Cell

DIRECTIONS: Tuple[Text, ...] = ("N", "E", "S", "W")

# Offsets in (row, col) == (y, x) order.
OFFSETS: Dict[Text, Tuple[int, int]] = {
    "N": (-1, 0),
    "E": (0, 1),
    "S": (1, 0),
    "W": (0, -1),
}


def turn_left(direction: Text) -> Text:
    return DIRECTIONS[(DIRECTIONS.index(direction) - 1) % 4]


def turn_right(direction: Text) -> Text:
    return DIRECTIONS[(DIRECTIONS.index(direction) + 1) % 4]


def opposite(direction: Text) -> Text:
    return DIRECTIONS[(DIRECTIONS.index(direction) + 2) % 4]


class Grid:
    """A ``rows`` x ``cols`` grid of ``(row, col)`` cells."""

    def __init__(self, rows: int, cols: int):
        if rows < 1 or cols < 1:
            raise InvalidGeometry(f"Grid must be non-empty, got {rows}x{cols}")
        self.rows = rows
        self.cols = cols

    def __contains__(self, cell: Cell) -> bool:
        r, c = cell
        return 0 <= r < self.rows and 0 <= c < self.cols

    def cells(self) -> Iterator[Cell]:
        for r in range(self.rows):
            for c in range(self.cols):
                yield (r, c)

    def step(self, cell: Cell, direction: Text) -> Optional[Cell]:
        """The neighbour in ``direction``, ``None`` off the grid."""

        dr, dc = OFFSETS[direction]
        target = (cell[0] + dr, cell[1] + dc)
        return target if target in self else None

    def neighbours(self, cell: Cell) -> Tuple[Cell, ...]:
        return tuple(
            target
            for target in (self.step(cell, d) for d in DIRECTIONS)
            if target is not None
        )

    def direction_to(self, cell: Cell, other: Cell) -> Optional[Text]:
        for d in DIRECTIONS:
            if self.step(cell, d) == other:
                return d
        return None

    def require(self, cell: Cell, what: Text) -> None:
        if cell not in self:
            raise InvalidGeometry(
                f"{what} {cell} lies outside the {self.rows}x{self.cols} grid"
            )


def cell_name(cell: Cell) -> Text:
    return f"{cell[0]}_{cell[1]}"
