"""Konane boards and jump moves.

A stone jumps orthogonally over an adjacent enemy stone onto the empty
square behind it. A move may chain further jumps in the same straight line
and direction; every prefix of a chain is a move on its own.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from src.shared.errors import NotationError

Position = tuple[int, int]

_DIRECTIONS: tuple[Position, ...] = ((-1, 0), (1, 0), (0, -1), (0, 1))


class Cell(Enum):
    """Contents of one square."""

    BLACK = "x"
    WHITE = "o"
    EMPTY = "."


class Player(Enum):
    """Black plays Left, White plays Right."""

    BLACK = "black"
    WHITE = "white"

    @property
    def stone(self) -> Cell:
        """Cell occupied by this player's stones."""
        return Cell.BLACK if self is Player.BLACK else Cell.WHITE

    @property
    def opponent(self) -> Player:
        """The other player."""
        return Player.WHITE if self is Player.BLACK else Player.BLACK


Grid = tuple[tuple[Cell, ...], ...]


@dataclass(frozen=True)
class Move:
    """One (possibly multi-hop) jump.

    Attributes:
        origin: Starting square.
        landings: Squares landed on, in order.
        captured: Enemy stones removed, in order.
    """

    origin: Position
    landings: tuple[Position, ...]
    captured: tuple[Position, ...]

    def __str__(self) -> str:
        path = [self.origin, *self.landings]
        return "-".join(f"{row},{col}" for row, col in path)


@dataclass(frozen=True)
class Board:
    """Rectangular konane position.

    Attributes:
        width: Number of columns.
        height: Number of rows.
        cells: Rows from top to bottom.
        black_captures: White stones removed by Black so far.
        white_captures: Black stones removed by White so far.
    """

    width: int
    height: int
    cells: Grid
    black_captures: int = 0
    white_captures: int = 0

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise ValueError(f"Board must be at least 1x1, got {self.width}x{self.height}")
        if len(self.cells) != self.height or any(len(row) != self.width for row in self.cells):
            raise ValueError(f"Cells do not match {self.width}x{self.height}")
        if self.black_captures < 0 or self.white_captures < 0:
            raise ValueError("Capture counts must be non-negative")

    @classmethod
    def from_text(cls, text: str, black_captures: int = 0, white_captures: int = 0) -> Board:
        """Parse rows of ``x``, ``o`` and ``.``; blank lines and surrounding spaces are ignored.

        Raises:
            NotationError: On an unknown character or ragged rows.
        """
        rows: list[tuple[Cell, ...]] = []
        offset = 0
        for line in text.splitlines(keepends=True):
            stripped = line.strip()
            start = offset + line.find(stripped) if stripped else offset
            offset += len(line)
            if not stripped:
                continue
            row: list[Cell] = []
            for index, char in enumerate(stripped):
                try:
                    row.append(Cell(char))
                except ValueError as e:
                    raise NotationError(text, start + index, f"Unknown board cell {char!r}") from e
            if rows and len(row) != len(rows[0]):
                raise NotationError(text, start, "Board rows must have equal length")
            rows.append(tuple(row))
        if not rows:
            raise NotationError(text, 0, "Board is empty")
        return cls(
            width=len(rows[0]),
            height=len(rows),
            cells=tuple(rows),
            black_captures=black_captures,
            white_captures=white_captures,
        )

    def to_text(self) -> str:
        """Rows top to bottom, newline separated."""
        return "\n".join("".join(cell.value for cell in row) for row in self.cells)

    def __str__(self) -> str:
        return self.to_text()

    @property
    def size(self) -> int:
        """Number of squares."""
        return self.width * self.height

    def at(self, position: Position) -> Cell:
        """Cell at (row, column)."""
        row, col = position
        return self.cells[row][col]

    def stones(self, player: Player) -> list[Position]:
        """Squares holding the player's stones, row-major."""
        return [
            (row, col)
            for row in range(self.height)
            for col in range(self.width)
            if self.cells[row][col] is player.stone
        ]

    def swap_colors(self) -> Board:
        """Same position with Black and White exchanged, captures included."""
        swap = {Cell.BLACK: Cell.WHITE, Cell.WHITE: Cell.BLACK, Cell.EMPTY: Cell.EMPTY}
        return Board(
            width=self.width,
            height=self.height,
            cells=tuple(tuple(swap[cell] for cell in row) for row in self.cells),
            black_captures=self.white_captures,
            white_captures=self.black_captures,
        )

    def contains(self, position: Position) -> bool:
        """Whether (row, column) lies on the board."""
        row, col = position
        return 0 <= row < self.height and 0 <= col < self.width

    def apply(self, move: Move, player: Player) -> Board:
        """Board after player makes move, with the captures credited."""
        grid = [list(row) for row in self.cells]
        grid[move.origin[0]][move.origin[1]] = Cell.EMPTY
        for row, col in move.captured:
            grid[row][col] = Cell.EMPTY
        final_row, final_col = move.landings[-1]
        grid[final_row][final_col] = player.stone
        captures = len(move.captured)
        return Board(
            width=self.width,
            height=self.height,
            cells=tuple(tuple(row) for row in grid),
            black_captures=self.black_captures + (captures if player is Player.BLACK else 0),
            white_captures=self.white_captures + (captures if player is Player.WHITE else 0),
        )


def legal_moves(board: Board, player: Player) -> list[tuple[Move, Board]]:
    """Every single and multi-jump available to player, with the resulting board.

    Args:
        board: Current position.
        player: Side to move.

    Returns:
        (move, board after move) pairs, ordered by origin, direction, then length.
    """
    enemy = player.opponent.stone
    result: list[tuple[Move, Board]] = []
    for origin in board.stones(player):
        for d_row, d_col in _DIRECTIONS:
            landings: list[Position] = []
            captured: list[Position] = []
            row, col = origin
            while True:
                over = (row + d_row, col + d_col)
                target = (row + 2 * d_row, col + 2 * d_col)
                if not (board.contains(target) and board.at(over) is enemy):
                    break
                if board.at(target) is not Cell.EMPTY:
                    break
                captured.append(over)
                landings.append(target)
                move = Move(origin=origin, landings=tuple(landings), captured=tuple(captured))
                result.append((move, board.apply(move, player)))
                row, col = target
    return result


def insecure_stones(board: Board, owner: Player) -> frozenset[Position]:
    """Owner's stones that the opponent could capture moving alone.

    A stone is insecure when some sequence of opponent moves, with the owner
    never moving, captures it. Each stone is judged on its own sequence.

    Args:
        board: Current position.
        owner: Player whose stones are examined.

    Returns:
        Positions of insecure stones.
    """
    attacker = owner.opponent
    insecure: set[Position] = set()
    seen: set[Grid] = {board.cells}
    queue = deque([board])
    while queue:
        current = queue.popleft()
        for move, after in legal_moves(current, attacker):
            # Owner stones never move here, so a captured square names the original stone.
            insecure.update(move.captured)
            if after.cells not in seen:
                seen.add(after.cells)
                queue.append(after)
    return frozenset(insecure)
