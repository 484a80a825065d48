"""Alldifferent kernels and Hall partitions of set-valued mappings.

Given a set-valued mapping between finite sets, this package computes its
Hall partition (or a Hall-condition violation witness), the alldifferent
kernel (the submapping of values lying on at least one injective selection),
single selections, and uniqueness tests; a brute-force oracle validates all
of it at desk scale, and a Sudoku propagator applies the per-unit kernel
filter to candidate elimination.
"""

from .mappings import (
    ENUMERATION_CAP,
    DomainError,
    FiniteMapping,
    InvalidMappingError,
    SizeCapError,
    complement,
    image_of_set,
    is_critical,
    is_non_reducible,
    min_image_size,
    residual,
)
from .partition import (
    ExitKind,
    HallPartition,
    HallViolation,
    check_hall,
    compute_hall_partition,
    partitions_equal_up_to_renumbering,
    verify_partition,
)
from .kernel import (
    InvalidPartitionError,
    KernelMapping,
    Selection,
    alldifferent_kernel,
    extract_selection,
    has_unique_selection,
    is_alldifferent,
    kernel_from_partition,
    punctured_mapping,
)
from .oracle import (
    SELECTION_CAP,
    SUBSET_SCAN_CAP,
    enumerate_selections,
    oracle_hall_check,
    oracle_kernel,
)

__all__ = [
    "ENUMERATION_CAP",
    "SELECTION_CAP",
    "SUBSET_SCAN_CAP",
    "DomainError",
    "InvalidMappingError",
    "InvalidPartitionError",
    "SizeCapError",
    "FiniteMapping",
    "ExitKind",
    "HallPartition",
    "HallViolation",
    "KernelMapping",
    "Selection",
    "image_of_set",
    "complement",
    "residual",
    "is_critical",
    "is_non_reducible",
    "min_image_size",
    "compute_hall_partition",
    "check_hall",
    "verify_partition",
    "partitions_equal_up_to_renumbering",
    "kernel_from_partition",
    "alldifferent_kernel",
    "is_alldifferent",
    "has_unique_selection",
    "extract_selection",
    "punctured_mapping",
    "enumerate_selections",
    "oracle_kernel",
    "oracle_hall_check",
]

__version__ = "0.1.0"
