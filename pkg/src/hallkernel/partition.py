"""Hall partitions: ordered block decompositions of a set-valued mapping.

A Hall partition splits the domain into blocks ``(W_1, ..., W_m)`` such that
each ``W_i`` is a non-reducible set of the mapping left over after removing
the earlier blocks and everything they can map to, and every block except
possibly the last is critical there.  Such a decomposition exists exactly
when the mapping satisfies the Hall condition (every subset's image is at
least as large as the subset), and it is unique up to renumbering.

:func:`compute_hall_partition` finds the partition by scanning subsets of the
remaining domain in increasing size (lexicographic within a size) and
extracting the first critical set found as the next block.  A subset whose
residual image is smaller than itself certifies a Hall-condition violation
instead; the violation is returned as a value, never raised.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .mappings import (
    ENUMERATION_CAP,
    FiniteMapping,
    DomainError,
    SizeCapError,
    bit_indices,
    image_of_set,
    is_critical,
    is_non_reducible,
    residual,
)


class ExitKind(enum.Enum):
    """How the block scan terminated.

    ``LAST_BLOCK_CRITICAL``: the final block was itself a critical set and
    exhausted the domain; the total image is exactly as large as the domain.
    ``LAST_BLOCK_NONCRITICAL``: no critical set remained, so the rest of the
    domain became the final block; the total image is strictly larger.
    """

    LAST_BLOCK_CRITICAL = "LastBlockCritical"
    LAST_BLOCK_NONCRITICAL = "LastBlockNonCritical"


@dataclass(frozen=True)
class HallPartition:
    """Blocks of a Hall partition with their residual images.

    ``residual_images[i]`` holds the values available to ``blocks[i]`` after
    everything the earlier blocks can take is struck out; the residual images
    are pairwise disjoint and together cover the image of the whole domain.
    """

    blocks: tuple[frozenset, ...]
    residual_images: tuple[frozenset, ...]
    exit_kind: ExitKind


@dataclass(frozen=True)
class HallViolation:
    """A witness subset of the domain whose image is smaller than itself."""

    witness: frozenset


def compute_hall_partition(mapping: FiniteMapping, *,
                           prune: bool = True) -> HallPartition | HallViolation:
    """Compute the Hall partition of a mapping, or a violation witness.

    Candidate subsets of the remaining domain are tried in increasing size
    and lexicographic index order within a size; the first critical set of
    the running residual mapping becomes the next block, which makes every
    block non-reducible there.  If a candidate's residual image is smaller
    than the candidate, the union of that candidate with the blocks taken so
    far witnesses a Hall-condition violation of the original mapping and is
    returned.  With ``prune`` enabled, sizes below the smallest residual
    image size are skipped; no critical or deficient set can live there.

    Domains larger than ``ENUMERATION_CAP`` are refused up front: the scan
    is exponential by design.
    """
    n = len(mapping.x_labels)
    if n > ENUMERATION_CAP:
        raise SizeCapError(
            f"partition scan over {n} elements exceeds the cap of {ENUMERATION_CAP}")
    full = mapping.full_x_bits
    remaining = full
    taken_image = 0
    block_bits: list[int] = []
    residual_bits: list[int] = []
    exit_kind = None
    while True:
        indices = list(bit_indices(remaining))
        res = [mapping.image_bits[i] & ~taken_image for i in indices]
        start = 1
        if prune:
            start = max(1, min(b.bit_count() for b in res))
        found = None
        deficient = None
        for size in range(start, len(indices) + 1):
            for combo in combinations(range(len(indices)), size):
                img = 0
                for k in combo:
                    img |= res[k]
                count = img.bit_count()
                if count < size:
                    deficient = combo
                    break
                if count == size:
                    found = (combo, img)
                    break
            if deficient is not None or found is not None:
                break
        if deficient is not None:
            wbits = 0
            for k in deficient:
                wbits |= 1 << indices[k]
            witness = wbits | (full & ~remaining)
            return HallViolation(frozenset(mapping.x_labels_of(witness)))
        if found is None:
            # No critical set among what remains: it all becomes the last block.
            img = 0
            for b in res:
                img |= b
            block_bits.append(remaining)
            residual_bits.append(img)
            exit_kind = ExitKind.LAST_BLOCK_NONCRITICAL
            break
        combo, img = found
        wbits = 0
        for k in combo:
            wbits |= 1 << indices[k]
        block_bits.append(wbits)
        residual_bits.append(img)
        taken_image |= img
        remaining &= ~wbits
        if remaining == 0:
            exit_kind = ExitKind.LAST_BLOCK_CRITICAL
            break
    return HallPartition(
        blocks=tuple(frozenset(mapping.x_labels_of(b)) for b in block_bits),
        residual_images=tuple(frozenset(mapping.y_labels_of(r)) for r in residual_bits),
        exit_kind=exit_kind,
    )


def check_hall(mapping: FiniteMapping) -> HallViolation | None:
    """Return a violation witness if the Hall condition fails, else ``None``."""
    result = compute_hall_partition(mapping)
    return result if isinstance(result, HallViolation) else None


def verify_partition(mapping: FiniteMapping, partition: HallPartition) -> bool:
    """Independently re-check that a value really is the Hall partition.

    Re-derives everything from the defining clauses using the core
    operations only (including the exhaustive non-reducibility check): the
    blocks must partition the domain, each block must have nonempty images
    and be non-reducible in the chained residual mapping, every block but the
    last must be critical there, and the stored residual images and exit kind
    must agree with recomputation.  Shares no code with
    :func:`compute_hall_partition`.
    """
    blocks = partition.blocks
    if len(blocks) != len(partition.residual_images):
        return False
    covered: set = set()
    total = 0
    for block in blocks:
        if not block:
            return False
        covered |= block
        total += len(block)
    if total != len(mapping.x_labels) or covered != set(mapping.x_labels):
        return False
    current = mapping
    last_critical = None
    try:
        for i, block in enumerate(blocks):
            if partition.residual_images[i] != image_of_set(current, block):
                return False
            if any(not current.image(x) for x in block):
                return False
            if not is_non_reducible(current, block):
                return False
            critical = is_critical(current, block)
            if i < len(blocks) - 1:
                if not critical:
                    return False
                current = residual(current, block)
            else:
                last_critical = critical
    except DomainError:
        return False
    expected = (ExitKind.LAST_BLOCK_CRITICAL if last_critical
                else ExitKind.LAST_BLOCK_NONCRITICAL)
    return partition.exit_kind is expected


def partitions_equal_up_to_renumbering(first: HallPartition,
                                       second: HallPartition) -> bool:
    """Whether two partitions have the same blocks as unordered families.

    Block order is a free choice of the scan, so equality ignores it; the
    residual image attached to each block must match as well (it is forced by
    the block family, so this doubles as a consistency check).
    """
    if len(first.blocks) != len(second.blocks):
        return False
    pairing_first = dict(zip(first.blocks, first.residual_images))
    pairing_second = dict(zip(second.blocks, second.residual_images))
    return pairing_first == pairing_second
