"""9x9 Sudoku as per-unit alldifferent propagation.

A grid splits into populated cells (the givens) and unpopulated cells, each
of which carries a markup: the digits not already given in its row, column
or block.  Every one of the 27 units induces a set-valued mapping from its
unpopulated cells to their markups, and intersecting each markup with the
unit mapping's alldifferent kernel is exactly the preemptive-set / pigeonhole
style of candidate elimination.  :func:`propagate` runs that to a global
fixpoint across all units, promoting cells whose markup collapses to a
single digit; :func:`solve` adds depth-first search on top.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .mappings import DomainError, FiniteMapping
from .kernel import alldifferent_kernel

Cell = tuple[int, int]

DIGITS = frozenset(range(1, 10))


class GridError(ValueError):
    """The grid text or its givens are structurally invalid."""


class Contradiction(Exception):
    """No digit assignment can complete the grid from here.

    ``unit`` names the unit whose cells cannot be filled with distinct
    digits, when one is known; ``cells`` is the witnessing set of cells.
    """

    def __init__(self, message: str, *, unit: "Unit | None" = None, cells=()):
        super().__init__(message)
        self.unit = unit
        self.cells = frozenset(cells)


@dataclass(frozen=True)
class Unit:
    """One row, column or block: nine cells that must hold nine distinct digits."""

    kind: str
    index: int
    cells: tuple[Cell, ...]

    def __str__(self) -> str:
        return f"{self.kind} {self.index}"


def _build_units() -> tuple[tuple[Unit, ...], tuple[Unit, ...], tuple[Unit, ...]]:
    rows = tuple(Unit("row", r, tuple((r, c) for c in range(1, 10)))
                 for r in range(1, 10))
    columns = tuple(Unit("column", c, tuple((r, c) for r in range(1, 10)))
                    for c in range(1, 10))
    blocks = []
    for b in range(9):
        r0, c0 = 3 * (b // 3) + 1, 3 * (b % 3) + 1
        cells = tuple((r0 + dr, c0 + dc) for dr in range(3) for dc in range(3))
        blocks.append(Unit("block", b + 1, cells))
    return rows, columns, tuple(blocks)


ROWS, COLUMNS, BLOCKS = _build_units()
ALL_UNITS: tuple[Unit, ...] = ROWS + COLUMNS + BLOCKS

ALL_CELLS: tuple[Cell, ...] = tuple((r, c) for r in range(1, 10) for c in range(1, 10))

UNITS_BY_CELL: dict[Cell, tuple[Unit, ...]] = {
    cell: tuple(u for u in ALL_UNITS if cell in u.cells) for cell in ALL_CELLS
}

#: The 20 other cells sharing a row, column or block with a given cell.
NEIGHBORS: dict[Cell, frozenset] = {
    cell: frozenset(c for u in UNITS_BY_CELL[cell] for c in u.cells) - {cell}
    for cell in ALL_CELLS
}


@dataclass
class SudokuGrid:
    """Givens plus the candidate digits of every unpopulated cell.

    Mutable working value: propagation shrinks candidate sets in place on its
    own copy.  Two grids compare equal when both the givens and the
    candidates agree.
    """

    givens: dict[Cell, int] = field(default_factory=dict)
    candidates: dict[Cell, set[int]] = field(default_factory=dict)

    def copy(self) -> "SudokuGrid":
        return SudokuGrid(dict(self.givens),
                          {c: set(v) for c, v in self.candidates.items()})

    @property
    def is_complete(self) -> bool:
        return not self.candidates

    def __str__(self) -> str:
        return render(self)


def parse_grid(text: str) -> SudokuGrid:
    """Read a grid from 81 significant characters; ``.`` and ``0`` are blanks.

    Whitespace is ignored, so both one-line and 9x9 layouts parse.  A wrong
    length, a stray character or a duplicated given within a unit raises
    :class:`GridError` naming the offending cell; markups are computed before
    returning, so an immediately contradictory grid raises
    :class:`Contradiction`.
    """
    chars = [ch for ch in text if not ch.isspace()]
    if len(chars) != 81:
        raise GridError(f"expected 81 cells, got {len(chars)}")
    givens: dict[Cell, int] = {}
    for idx, ch in enumerate(chars):
        cell = (idx // 9 + 1, idx % 9 + 1)
        if ch in ".0":
            continue
        if ch not in "123456789":
            raise GridError(f"bad character {ch!r} at cell {cell}")
        givens[cell] = int(ch)
    for unit in ALL_UNITS:
        seen: dict[int, Cell] = {}
        for cell in unit.cells:
            digit = givens.get(cell)
            if digit is None:
                continue
            if digit in seen:
                raise GridError(
                    f"duplicate given {digit} in {unit} at cell {cell}")
            seen[digit] = cell
    return compute_markups(SudokuGrid(givens, {}))


def compute_markups(grid: SudokuGrid) -> SudokuGrid:
    """Rebuild every unpopulated cell's candidates from the givens alone."""
    candidates: dict[Cell, set[int]] = {}
    for cell in ALL_CELLS:
        if cell in grid.givens:
            continue
        cand = set(DIGITS)
        for other in NEIGHBORS[cell]:
            cand.discard(grid.givens.get(other, 0))
        if not cand:
            raise Contradiction(f"cell {cell} has no admissible digit",
                                cells=(cell,))
        candidates[cell] = cand
    return SudokuGrid(dict(grid.givens), candidates)


def unit_mapping(grid: SudokuGrid, unit: Unit) -> FiniteMapping:
    """The unit's unpopulated cells mapped to their candidate digits."""
    xs = [c for c in unit.cells if c in grid.candidates]
    if not xs:
        raise DomainError(f"{unit} has no unpopulated cells")
    digits = sorted(set().union(*(grid.candidates[c] for c in xs)))
    return FiniteMapping.from_dict({c: grid.candidates[c] for c in xs},
                                   y_order=digits)


def propagate(grid: SudokuGrid, *, max_sweeps: int | None = None,
              unit_order: tuple[Unit, ...] | None = None) -> SudokuGrid:
    """Intersect candidates with per-unit alldifferent kernels to a fixpoint.

    One sweep visits the units in order (rows, then columns, then blocks by
    default); a cell whose candidates collapse to one digit is promoted to a
    given at once, striking the digit from its neighbors' candidates.  Units
    are revisited only while something they see has changed, which leaves the
    fixpoint untouched because kernel filtering is idempotent.  Raises
    :class:`Contradiction` when a unit admits no alldifferent assignment or a
    candidate set runs empty; the input grid is never mutated.
    """
    result = grid.copy()
    order = tuple(unit_order) if unit_order is not None else ALL_UNITS
    dirty = set(order)
    sweeps = 0
    while dirty and (max_sweeps is None or sweeps < max_sweeps):
        sweeps += 1
        for unit in order:
            if unit not in dirty:
                continue
            dirty.discard(unit)
            cells = [c for c in unit.cells if c in result.candidates]
            if not cells:
                continue
            kern = alldifferent_kernel(unit_mapping(result, unit))
            if kern.is_empty:
                witness = kern.witness.witness if kern.witness else frozenset(cells)
                raise Contradiction(
                    f"{unit} admits no alldifferent assignment", unit=unit,
                    cells=witness)
            singles = []
            for cell, image in zip(cells, kern.images):
                new = set(image)
                if new != result.candidates[cell]:
                    result.candidates[cell] = new
                    for u in UNITS_BY_CELL[cell]:
                        if u is not unit:
                            dirty.add(u)
                if len(new) == 1:
                    singles.append(cell)
            _promote(result, singles, dirty)
    return result


def _promote(grid: SudokuGrid, cells, dirty: set) -> None:
    # Turn single-candidate cells into givens, cascading through neighbors.
    queue = deque(cells)
    while queue:
        cell = queue.popleft()
        if cell not in grid.candidates:
            continue
        (digit,) = grid.candidates[cell]
        del grid.candidates[cell]
        grid.givens[cell] = digit
        dirty.update(UNITS_BY_CELL[cell])
        for other in NEIGHBORS[cell]:
            cand = grid.candidates.get(other)
            if cand is None or digit not in cand:
                continue
            cand.discard(digit)
            if not cand:
                raise Contradiction(
                    f"cell {other} has no admissible digit", cells=(other,))
            if len(cand) == 1:
                queue.append(other)
            dirty.update(UNITS_BY_CELL[other])


def solve(grid: SudokuGrid) -> SudokuGrid | None:
    """Propagate, then search depth-first; ``None`` when no completion exists.

    Branches on a cell with the fewest candidates (row-major on ties), trying
    digits in ascending order and propagating after each tentative
    assignment.
    """
    try:
        settled = propagate(grid)
    except Contradiction:
        return None
    if settled.is_complete:
        return settled
    cell = min(settled.candidates,
               key=lambda c: (len(settled.candidates[c]), c))
    for digit in sorted(settled.candidates[cell]):
        trial = settled.copy()
        trial.candidates[cell] = {digit}
        solution = solve(trial)
        if solution is not None:
            return solution
    return None


def is_solved(grid: SudokuGrid) -> bool:
    """Complete, with every unit holding exactly the digits 1..9."""
    if not grid.is_complete:
        return False
    return all({grid.givens[c] for c in unit.cells} == DIGITS
               for unit in ALL_UNITS)


def render(grid: SudokuGrid) -> str:
    """Pretty 9x9 text with block separators; unpopulated cells print ``.``."""
    lines = []
    for r in range(1, 10):
        row = []
        for c in range(1, 10):
            row.append(str(grid.givens.get((r, c), ".")))
            if c in (3, 6):
                row.append("|")
        lines.append(" ".join(row))
        if r in (3, 6):
            lines.append("------+-------+------")
    return "\n".join(lines)


def grid_line(grid: SudokuGrid) -> str:
    """The 81-character single-line form; unpopulated cells print ``.``."""
    return "".join(str(grid.givens.get(cell, ".")) for cell in ALL_CELLS)
