"""
Sudoku propagation with per-unit kernels
========================================

Each row, column and block of a Sudoku grid induces a small set-valued
mapping from its open cells to their candidate digits.  Intersecting the
candidates with that mapping's alldifferent kernel is the classic
preemptive-set elimination; running it across all 27 units to a fixpoint
cracks easy puzzles outright and strips the search space for hard ones.
"""

import random

from hallkernel import alldifferent_kernel
from hallkernel.sudoku import (
    ALL_CELLS,
    ROWS,
    grid_line,
    is_solved,
    parse_grid,
    propagate,
    render,
    solve,
    unit_mapping,
)

# Row 1 holds 4..9 in its first six columns; a stray 3 in columns 7 and 8
# leaves cells (1,7) and (1,8) with {1,2} -- a naked pair -- and (1,9) with
# {1,2,3}.
chars = ["."] * 81
for col, digit in zip(range(1, 7), range(4, 10)):
    chars[col - 1] = str(digit)
chars[4 * 9 + 6] = "3"   # (5,7)
chars[7 * 9 + 7] = "3"   # (8,8)
puzzle = parse_grid("".join(chars))
print(render(puzzle))

row = unit_mapping(puzzle, ROWS[0])
print("\nrow-1 markups:", {c: sorted(v) for c, v in row.images_by_label().items()})
kern = alldifferent_kernel(row)
print("row-1 kernel: ", {c: sorted(v) for c, v in kern.images_by_label().items()})

# The pair eats 1 and 2, so the kernel pins (1,9) to the digit 3; one
# propagation sweep promotes it to a given.
swept = propagate(puzzle, max_sweeps=1)
print("\n(1,9) after one sweep:", swept.givens[(1, 9)])

# A full solve: blank 55 cells of a complete grid and let propagation plus
# depth-first search restore a valid solution.
complete = "".join(str(((3 * ((r - 1) % 3) + (r - 1) // 3 + (c - 1)) % 9) + 1)
                   for r in range(1, 10) for c in range(1, 10))
rng = random.Random(4)
blanks = set(rng.sample(ALL_CELLS, 55))
holey = "".join("." if (i // 9 + 1, i % 9 + 1) in blanks else ch
                for i, ch in enumerate(complete))
solution = solve(parse_grid(holey))
print("\nsolved a 55-blank grid?", is_solved(solution))
print(render(solution))
print("\nas one line:", grid_line(solution))
