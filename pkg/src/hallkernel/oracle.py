"""Brute-force reference implementations used to validate everything else.

Deliberately naive: selections are enumerated by depth-first assignment with
nothing cleverer than a used-value set, and the Hall condition is checked by
scanning every nonempty subset of the domain.  Keeping these independent of
the bitset machinery minimizes the chance of a shared bug.
"""

from __future__ import annotations

from itertools import combinations

from .mappings import FiniteMapping, SizeCapError
from .partition import HallViolation
from .kernel import KernelMapping, Selection

SELECTION_CAP = 12
SUBSET_SCAN_CAP = 20


def enumerate_selections(mapping: FiniteMapping, *,
                         cap: int = SELECTION_CAP) -> list[Selection]:
    """Every alldifferent selection, in depth-first order over the domain."""
    xs = mapping.x_labels
    if len(xs) > cap:
        raise SizeCapError(
            f"selection enumeration over {len(xs)} elements exceeds the cap of {cap}")
    ordered_images = [tuple(y for y in mapping.y_labels if y in mapping.image(x))
                      for x in xs]
    found: list[Selection] = []
    picks: list = []
    used: set = set()

    def descend(i: int) -> None:
        if i == len(xs):
            found.append(Selection(xs, tuple(picks)))
            return
        for y in ordered_images[i]:
            if y in used:
                continue
            used.add(y)
            picks.append(y)
            descend(i + 1)
            picks.pop()
            used.discard(y)

    descend(0)
    return found


def oracle_kernel(mapping: FiniteMapping, *,
                  cap: int = SELECTION_CAP) -> KernelMapping:
    """The kernel by definition: collect each element's values over all selections."""
    selections = enumerate_selections(mapping, cap=cap)
    images = tuple(frozenset(s.values[i] for s in selections)
                   for i in range(len(mapping.x_labels)))
    return KernelMapping(mapping, images)


def oracle_hall_check(mapping: FiniteMapping, *,
                      cap: int = SUBSET_SCAN_CAP) -> HallViolation | None:
    """Scan all nonempty subsets for one whose image is too small.

    Returns the first violating subset in increasing-size, then lexicographic,
    order; ``None`` when the Hall condition holds.
    """
    xs = mapping.x_labels
    if len(xs) > cap:
        raise SizeCapError(
            f"subset scan over {len(xs)} elements exceeds the cap of {cap}")
    images = {x: mapping.image(x) for x in xs}
    for size in range(1, len(xs) + 1):
        for combo in combinations(xs, size):
            union: set = set()
            for x in combo:
                union |= images[x]
            if len(union) < size:
                return HallViolation(frozenset(combo))
    return None
