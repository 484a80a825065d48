import random

import pytest

from hallkernel import DomainError, check_hall
from hallkernel.sudoku import (
    ALL_CELLS,
    ALL_UNITS,
    BLOCKS,
    COLUMNS,
    ROWS,
    UNITS_BY_CELL,
    Contradiction,
    GridError,
    compute_markups,
    grid_line,
    is_solved,
    parse_grid,
    propagate,
    render,
    solve,
    unit_mapping,
)

from conftest import blanked, canonical_grid_text


def put(chars, r, c, digit):
    chars[(r - 1) * 9 + (c - 1)] = str(digit)


def naked_pair_text():
    # Row 1: givens 4..9 in columns 1..6; a 3 in column 7 and one in column 8
    # leaves (1,7) and (1,8) with {1,2} and (1,9) with {1,2,3}.
    chars = ["."] * 81
    for c, digit in zip(range(1, 7), range(4, 10)):
        put(chars, 1, c, digit)
    put(chars, 5, 7, 3)
    put(chars, 8, 8, 3)
    return "".join(chars)


def pigeonhole_text():
    # (1,1) and (1,9) each see 1,2,3,4 in the row and 6,7,8,9 in the column,
    # pinning both markups to exactly {5}.
    chars = ["."] * 81
    for c, digit in zip(range(2, 6), range(1, 5)):
        put(chars, 1, c, digit)
    for r, digit in zip(range(2, 6), range(6, 10)):
        put(chars, r, 1, digit)
    for r, digit in zip(range(6, 10), range(6, 10)):
        put(chars, r, 9, digit)
    return "".join(chars)


class TestUnits:
    def test_27_units_cover_the_grid(self):
        assert len(ALL_UNITS) == 27
        assert len(ROWS) == len(COLUMNS) == len(BLOCKS) == 9
        covered = set()
        for unit in ALL_UNITS:
            assert len(unit.cells) == 9
            covered.update(unit.cells)
        assert covered == set(ALL_CELLS)

    def test_each_cell_lies_in_exactly_three_units(self):
        assert all(len(UNITS_BY_CELL[cell]) == 3 for cell in ALL_CELLS)


class TestParseGrid:
    def test_all_blank(self):
        grid = parse_grid("." * 81)
        assert grid.givens == {}
        assert all(cand == set(range(1, 10)) for cand in grid.candidates.values())

    def test_zero_means_blank_and_whitespace_ignored(self):
        text = canonical_grid_text()
        pretty = "\n".join(text[i:i + 9] for i in range(0, 81, 9))
        assert parse_grid(pretty).givens == parse_grid(text).givens
        assert parse_grid("0" * 81).givens == {}

    def test_canonical_grid_is_complete_and_valid(self):
        grid = parse_grid(canonical_grid_text())
        assert grid.is_complete
        assert is_solved(grid)

    def test_wrong_length(self):
        with pytest.raises(GridError):
            parse_grid("." * 80)

    def test_bad_character(self):
        with pytest.raises(GridError):
            parse_grid("x" + "." * 80)

    def test_duplicate_given_in_a_unit(self):
        chars = ["."] * 81
        put(chars, 1, 1, 5)
        put(chars, 1, 7, 5)
        with pytest.raises(GridError, match="row 1"):
            parse_grid("".join(chars))


class TestComputeMarkups:
    def test_single_given_excludes_along_its_units(self):
        chars = ["."] * 81
        put(chars, 1, 1, 7)
        grid = parse_grid("".join(chars))
        assert grid.candidates[(1, 5)] == set(range(1, 10)) - {7}
        assert grid.candidates[(5, 5)] == set(range(1, 10))

    def test_complete_grid_has_nothing_to_compute(self):
        grid = parse_grid(canonical_grid_text())
        assert compute_markups(grid).candidates == {}

    def test_eight_row_givens_force_the_ninth(self):
        chars = ["."] * 81
        for c in range(1, 9):
            put(chars, 1, c, c)
        grid = parse_grid("".join(chars))
        assert grid.candidates[(1, 9)] == {9}


class TestUnitMapping:
    def test_packages_candidates(self):
        grid = parse_grid(naked_pair_text())
        mapping = unit_mapping(grid, ROWS[0])
        assert mapping.x_labels == ((1, 7), (1, 8), (1, 9))
        assert mapping.images_by_label() == {
            (1, 7): {1, 2}, (1, 8): {1, 2}, (1, 9): {1, 2, 3}}

    def test_fully_populated_unit_is_signalled(self):
        grid = parse_grid(canonical_grid_text())
        with pytest.raises(DomainError):
            unit_mapping(grid, ROWS[0])

    def test_singleton_candidate(self):
        chars = ["."] * 81
        for c in range(1, 9):
            put(chars, 1, c, c)
        grid = parse_grid("".join(chars))
        mapping = unit_mapping(grid, ROWS[0])
        assert mapping.images_by_label() == {(1, 9): {9}}


class TestPropagate:
    def test_naked_pair_promotes_the_odd_cell(self):
        grid = propagate(parse_grid(naked_pair_text()), max_sweeps=1)
        assert grid.givens[(1, 9)] == 3
        assert grid.candidates[(1, 7)] == {1, 2}
        assert grid.candidates[(1, 8)] == {1, 2}

    def test_solved_grid_is_a_fixpoint(self):
        grid = parse_grid(canonical_grid_text())
        assert propagate(grid) == grid

    def test_pigeonhole_contradiction(self):
        grid = parse_grid(pigeonhole_text())
        assert grid.candidates[(1, 1)] == {5}
        assert grid.candidates[(1, 9)] == {5}
        with pytest.raises(Contradiction) as info:
            propagate(grid)
        assert info.value.cells

    def test_input_grid_is_not_mutated(self):
        grid = parse_grid(naked_pair_text())
        before = grid.copy()
        propagate(grid)
        assert grid == before

    def test_idempotent_and_monotone(self):
        rng = random.Random(11)
        text = canonical_grid_text()
        for _ in range(10):
            cells = rng.sample(ALL_CELLS, 45)
            grid = parse_grid(blanked(text, cells))
            result = propagate(grid)
            assert propagate(result) == result
            for cell, cand in result.candidates.items():
                assert cand <= grid.candidates[cell]
            assert set(grid.givens) <= set(result.givens)
            assert all(result.givens[c] == d for c, d in grid.givens.items())

    def test_unit_order_does_not_change_the_fixpoint(self):
        rng = random.Random(23)
        text = canonical_grid_text()
        for _ in range(5):
            grid = parse_grid(blanked(text, rng.sample(ALL_CELLS, 50)))
            forward = propagate(grid)
            backward = propagate(grid, unit_order=tuple(reversed(ALL_UNITS)))
            assert forward == backward

    def test_units_stay_hall_consistent(self):
        rng = random.Random(5)
        text = canonical_grid_text()
        grid = parse_grid(blanked(text, rng.sample(ALL_CELLS, 50)))
        result = propagate(grid)
        for unit in ALL_UNITS:
            if any(c in result.candidates for c in unit.cells):
                assert check_hall(unit_mapping(result, unit)) is None


class TestSolve:
    def test_single_blank_is_restored(self):
        text = canonical_grid_text()
        grid = parse_grid(blanked(text, [(4, 6)]))
        solution = solve(grid)
        assert grid_line(solution) == text

    def test_empty_grid_reaches_some_valid_solution(self):
        solution = solve(parse_grid("." * 81))
        assert solution is not None
        assert is_solved(solution)

    def test_heavily_blanked_canonical_grid(self):
        rng = random.Random(99)
        text = canonical_grid_text()
        grid = parse_grid(blanked(text, rng.sample(ALL_CELLS, 55)))
        solution = solve(grid)
        assert solution is not None
        assert is_solved(solution)
        for cell, digit in grid.givens.items():
            assert solution.givens[cell] == digit

    def test_17_given_grid_needs_real_search(self):
        rng = random.Random(3)
        text = canonical_grid_text()
        grid = parse_grid(blanked(text, rng.sample(ALL_CELLS, 64)))
        solution = solve(grid)
        assert solution is not None
        assert is_solved(solution)
        for cell, digit in grid.givens.items():
            assert solution.givens[cell] == digit

    def test_unsolvable_grid(self):
        assert solve(parse_grid(pigeonhole_text())) is None


class TestRendering:
    def test_round_trip_through_text(self):
        grid = parse_grid(naked_pair_text())
        assert parse_grid(grid_line(grid)) == grid
        assert parse_grid(render(grid).replace("|", " ").replace("-", " ")
                          .replace("+", " ")) == grid

    def test_render_shape(self):
        lines = render(parse_grid("." * 81)).splitlines()
        assert len(lines) == 11
        assert lines[3] == lines[7] == "------+-------+------"
