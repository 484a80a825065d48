"""
Hall partitions and violation witnesses
=======================================

The block decomposition behind everything else: each block is the first
critical set the scan finds in what is left of the mapping, so blocks are
as small as possible and the decomposition is unique up to renumbering.
"""

import random

from hallkernel import (
    FiniteMapping,
    HallViolation,
    compute_hall_partition,
    partitions_equal_up_to_renumbering,
    verify_partition,
)

F = FiniteMapping.from_dict({1: {1, 2}, 2: {1, 2}, 3: {1, 2, 3}})
P = compute_hall_partition(F)
print("blocks:         ", [sorted(b) for b in P.blocks])
print("residual images:", [sorted(r) for r in P.residual_images])
print("exit:           ", P.exit_kind.value)

# The validator re-derives everything from the defining clauses, sharing no
# code with the scan above.
print("validator agrees?", verify_partition(F, P))

# When some subset's image is too small, there is no partition; the scan
# returns the violating subset instead of raising.
bad = FiniteMapping.from_dict({1: {1}, 2: {1}})
result = compute_hall_partition(bad)
assert isinstance(result, HallViolation)
print("violation witness:", sorted(result.witness))

# Reordering the ground sets changes nothing but the discovery order.
rng = random.Random(0)
xs = list(F.x_labels)
rng.shuffle(xs)
shuffled = FiniteMapping(xs, F.y_labels, F.images_by_label())
P2 = compute_hall_partition(shuffled)
print("same block family after relabeling?",
      partitions_equal_up_to_renumbering(P, P2))
