"""Command-line front end.

Subcommands: ``check``, ``partition``, ``kernel``, ``select``, ``enumerate``
over mapping documents, and ``sudoku propagate`` / ``sudoku solve`` over
81-character grid lines.  Exit codes: 0 success, 1 Hall violation /
contradiction / unsolvable (with the witness printed), 2 parse or validity
error, 3 size cap exceeded.

Mapping document format: ``#`` starts a comment; optional ``X:`` / ``Y:``
header lines list whitespace-separated element tokens; every body line is
``<x> : <y1> <y2> ...``, written ``<x> :`` for an empty image.
"""

from __future__ import annotations

import argparse
import json
import sys

from .mappings import (
    DomainError,
    FiniteMapping,
    InvalidMappingError,
    SizeCapError,
)
from .partition import HallViolation, check_hall, compute_hall_partition
from .kernel import alldifferent_kernel, extract_selection
from .oracle import enumerate_selections
from . import sudoku
from .sudoku import Contradiction, GridError, parse_grid


class DocumentError(ValueError):
    """A mapping document failed to parse."""


# -- mapping documents ----------------------------------------------------


def parse_mapping_document(text: str) -> FiniteMapping:
    """Parse the text mapping format into a :class:`FiniteMapping`."""
    declared_x = None
    declared_y = None
    entries: dict[str, list[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("X:"):
            if declared_x is not None:
                raise DocumentError(f"line {lineno}: duplicate X: header")
            declared_x = line[2:].split()
            _reject_duplicates(declared_x, f"line {lineno}: X header")
            continue
        if line.startswith("Y:"):
            if declared_y is not None:
                raise DocumentError(f"line {lineno}: duplicate Y: header")
            declared_y = line[2:].split()
            _reject_duplicates(declared_y, f"line {lineno}: Y header")
            continue
        if ":" not in line:
            raise DocumentError(f"line {lineno}: expected '<x> : <values>'")
        head, _, tail = line.partition(":")
        x_tokens = head.split()
        if len(x_tokens) != 1:
            raise DocumentError(
                f"line {lineno}: expected exactly one element before ':'")
        x = x_tokens[0]
        if x in entries:
            raise DocumentError(f"line {lineno}: duplicate image line for {x!r}")
        ys = tail.split()
        _reject_duplicates(ys, f"line {lineno}: image of {x!r}")
        entries[x] = ys
    if not entries:
        raise DocumentError("document declares no images")
    if declared_x is not None:
        for x in entries:
            if x not in declared_x:
                raise DocumentError(f"{x!r} has an image line but is not in X")
        for x in declared_x:
            if x not in entries:
                raise DocumentError(f"{x!r} is declared in X but has no image line")
        x_order = declared_x
    else:
        x_order = list(entries)
    if declared_y is not None:
        y_order = declared_y
        declared = set(declared_y)
        for x, ys in entries.items():
            for y in ys:
                if y not in declared:
                    raise DocumentError(
                        f"image of {x!r} contains {y!r}, which is not in Y")
    else:
        seen: dict[str, None] = {}
        for x in x_order:
            for y in entries[x]:
                seen.setdefault(y)
        y_order = list(seen)
    return FiniteMapping(x_order, y_order, entries)


def _reject_duplicates(tokens: list[str], where: str) -> None:
    if len(set(tokens)) != len(tokens):
        raise DocumentError(f"{where} contains duplicate tokens")


def serialize_mapping_document(mapping: FiniteMapping) -> str:
    """Write a mapping back out in canonical document form."""
    for label in (*mapping.x_labels, *mapping.y_labels):
        token = str(label)
        if not token or ":" in token or any(ch.isspace() for ch in token):
            raise DocumentError(f"label {label!r} cannot be written as a token")
    lines = ["X: " + " ".join(str(x) for x in mapping.x_labels),
             "Y: " + " ".join(str(y) for y in mapping.y_labels)]
    for x in mapping.x_labels:
        image = mapping.image(x)
        ys = " ".join(str(y) for y in mapping.y_labels if y in image)
        lines.append(f"{x} : {ys}".rstrip())
    return "\n".join(lines) + "\n"


# -- formatting helpers ----------------------------------------------------


def _x_sorted(mapping: FiniteMapping, members) -> list:
    return [x for x in mapping.x_labels if x in members]


def _y_sorted(mapping: FiniteMapping, members) -> list:
    return [y for y in mapping.y_labels if y in members]


def _set_text(labels) -> str:
    return "{" + ", ".join(str(x) for x in labels) + "}"


def _witness_text(mapping: FiniteMapping, violation: HallViolation) -> str:
    return _set_text(_x_sorted(mapping, violation.witness))


def _read_input(args) -> str:
    if args.input is not None:
        with open(args.input, encoding="utf-8") as handle:
            return handle.read()
    return sys.stdin.read()


def _load_mapping(args) -> FiniteMapping:
    return parse_mapping_document(_read_input(args))


# -- mapping subcommands ----------------------------------------------------


def _cmd_check(args) -> int:
    mapping = _load_mapping(args)
    violation = check_hall(mapping)
    if args.format == "json":
        payload = {"ok": violation is None}
        if violation is not None:
            payload["witness"] = [str(x) for x in _x_sorted(mapping, violation.witness)]
        print(json.dumps(payload))
        return 0 if violation is None else 1
    if violation is None:
        print("OK")
        return 0
    print(f"violation: {_witness_text(mapping, violation)}")
    return 1


def _cmd_partition(args) -> int:
    mapping = _load_mapping(args)
    result = compute_hall_partition(mapping)
    if isinstance(result, HallViolation):
        if args.format == "json":
            print(json.dumps(
                {"witness": [str(x) for x in _x_sorted(mapping, result.witness)]}))
        else:
            print(f"violation: {_witness_text(mapping, result)}")
        return 1
    if args.format == "json":
        print(json.dumps({
            "blocks": [[str(x) for x in _x_sorted(mapping, b)] for b in result.blocks],
            "residuals": [[str(y) for y in _y_sorted(mapping, r)]
                          for r in result.residual_images],
            "exit_kind": result.exit_kind.value,
        }))
        return 0
    for i, (block, resid) in enumerate(zip(result.blocks, result.residual_images),
                                       start=1):
        left = _set_text(_x_sorted(mapping, block))
        right = _set_text(_y_sorted(mapping, resid))
        print(f"block {i}: {left} -> {right}")
    print(f"exit: {result.exit_kind.value}")
    return 0


def _cmd_kernel(args) -> int:
    mapping = _load_mapping(args)
    kern = alldifferent_kernel(mapping)
    witness = kern.witness
    if args.format == "json":
        print(json.dumps({
            "kernel": {str(x): [str(y) for y in _y_sorted(mapping, img)]
                       for x, img in zip(mapping.x_labels, kern.images)},
            "empty": kern.is_empty,
            "witness": ([str(x) for x in _x_sorted(mapping, witness.witness)]
                        if witness is not None else None),
        }))
        return 1 if kern.is_empty else 0
    for x, img in zip(mapping.x_labels, kern.images):
        ys = " ".join(str(y) for y in _y_sorted(mapping, img))
        print(f"{x}: {ys}".rstrip())
    if kern.is_empty and witness is not None:
        print(f"witness: {_witness_text(mapping, witness)}")
        return 1
    return 0


def _cmd_select(args) -> int:
    mapping = _load_mapping(args)
    result = extract_selection(mapping)
    if isinstance(result, HallViolation):
        if args.format == "json":
            print(json.dumps({
                "selection": None,
                "witness": [str(x) for x in _x_sorted(mapping, result.witness)]}))
        else:
            print(f"violation: {_witness_text(mapping, result)}")
        return 1
    if args.format == "json":
        print(json.dumps(
            {"selection": {str(x): str(y) for x, y in result.items()}}))
        return 0
    for x, y in result.items():
        print(f"{x} -> {y}")
    return 0


def _cmd_enumerate(args) -> int:
    mapping = _load_mapping(args)
    selections = enumerate_selections(mapping)
    if args.format == "json":
        print(json.dumps({
            "selections": [{str(x): str(y) for x, y in s.items()}
                           for s in selections]}))
        return 0
    for s in selections:
        print(" ".join(f"{x}->{y}" for x, y in s.items()))
    return 0


# -- sudoku subcommands ------------------------------------------------------


def _load_grid_texts(args) -> list[str]:
    text = _read_input(args)
    significant = [ch for ch in text if not ch.isspace()]
    if len(significant) == 81:
        return [text]
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise GridError("no grid in input")
    return lines


def _grid_payload(grid: sudoku.SudokuGrid) -> dict:
    return {
        "grid": sudoku.grid_line(grid),
        "complete": grid.is_complete,
        "candidates": {f"{r},{c}": sorted(v)
                       for (r, c), v in sorted(grid.candidates.items())},
    }


def _cmd_sudoku_propagate(args) -> int:
    results = [sudoku.propagate(parse_grid(text)) for text in _load_grid_texts(args)]
    if args.format == "json":
        payloads = [_grid_payload(g) for g in results]
        print(json.dumps(payloads[0] if len(payloads) == 1 else payloads))
    else:
        print("\n\n".join(sudoku.render(g) for g in results))
    return 0


def _cmd_sudoku_solve(args) -> int:
    solutions = []
    for text in _load_grid_texts(args):
        solution = sudoku.solve(parse_grid(text))
        if solution is None:
            if args.format == "json":
                print(json.dumps({"solved": False}))
            else:
                print("unsolvable")
            return 1
        solutions.append(solution)
    if args.format == "json":
        payloads = [_grid_payload(g) for g in solutions]
        print(json.dumps(payloads[0] if len(payloads) == 1 else payloads))
    else:
        print("\n\n".join(sudoku.render(g) for g in solutions))
    return 0


# -- wiring ------------------------------------------------------------------


def _add_io_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", metavar="FILE",
                        help="read from FILE instead of standard input")
    parser.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default: text)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hallkernel",
        description="Hall partitions, alldifferent kernels and Sudoku propagation "
                    "for set-valued mappings over finite sets.")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for randomized utilities (reserved)")
    commands = parser.add_subparsers(dest="command", required=True)

    for name, handler, description in (
            ("check", _cmd_check, "test the Hall condition"),
            ("partition", _cmd_partition, "compute the Hall partition"),
            ("kernel", _cmd_kernel, "compute the alldifferent kernel"),
            ("select", _cmd_select, "extract one alldifferent selection"),
            ("enumerate", _cmd_enumerate, "list all alldifferent selections")):
        sub = commands.add_parser(name, description=description, help=description)
        _add_io_options(sub)
        sub.set_defaults(handler=handler)

    sud = commands.add_parser("sudoku", description="Sudoku propagation and solving",
                              help="Sudoku propagation and solving")
    sud_commands = sud.add_subparsers(dest="sudoku_command", required=True)
    for name, handler, description in (
            ("propagate", _cmd_sudoku_propagate,
             "narrow candidates to the per-unit alldifferent fixpoint"),
            ("solve", _cmd_sudoku_solve, "solve grids completely")):
        sub = sud_commands.add_parser(name, description=description, help=description)
        _add_io_options(sub)
        sub.set_defaults(handler=handler)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except Contradiction as exc:
        unit = str(exc.unit) if exc.unit is not None else None
        cells = sorted(exc.cells)
        if args.format == "json":
            print(json.dumps({"contradiction": str(exc), "unit": unit,
                              "cells": [list(c) for c in cells]}))
        else:
            where = f" in {unit}" if unit else ""
            print(f"contradiction{where}: {_set_text(cells)}")
        return 1
    except (DocumentError, InvalidMappingError, DomainError, GridError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
