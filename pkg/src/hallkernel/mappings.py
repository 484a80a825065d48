"""Set-valued mappings between finite ground sets.

The central value is :class:`FiniteMapping`: an assignment of a subset of a
finite codomain ``Y`` to every element of a finite domain ``X``.  This module
provides the small calculus everything else builds on: images of domain
subsets, complement mappings (drop part of the domain, strike a set of values
from every image), residual mappings, and two structural predicates --
*critical* sets, whose image is exactly as large as the set itself, and
*non-reducible* sets, which contain no proper critical subset.

Labels are opaque; internally every image is a bitset over codomain
positions, so subset enumeration, unions and disjointness checks stay cheap.
All values are immutable and safe to share between threads.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Mapping
from itertools import combinations
from typing import Any

Label = Hashable

#: Soft limit on the size of a set whose subsets get enumerated exhaustively
#: (non-reducibility checks, the partition scan).  The work is Theta(2^n) by
#: design; past this point it is never going to finish at a desk.
ENUMERATION_CAP = 24


class DomainError(ValueError):
    """An element was used against a ground set it does not belong to."""


class InvalidMappingError(ValueError):
    """A mapping value violates its construction invariants."""


class SizeCapError(RuntimeError):
    """An exhaustive enumeration would exceed the configured size cap."""


def bit_indices(bits: int):
    """Yield the positions of the set bits of ``bits``, ascending."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


class FiniteMapping:
    """A set-valued mapping from a finite domain X into subsets of Y.

    ``x_labels`` and ``y_labels`` fix the (stable, deterministic) enumeration
    order of the ground sets; ``image_bits[i]`` is the image of the i-th
    domain element as a bitset over ``y_labels`` positions.  The domain must
    be nonempty; images may be empty, and the codomain may be empty when all
    images are (complement mappings can strike every value).
    """

    __slots__ = ("x_labels", "y_labels", "image_bits", "_x_index", "_y_index")

    def __init__(self, x_elements: Iterable[Label], y_elements: Iterable[Label],
                 images: Mapping[Label, Iterable[Label]]):
        x_labels = tuple(x_elements)
        y_labels = tuple(y_elements)
        if not x_labels:
            raise InvalidMappingError("domain must be nonempty")
        x_index = {x: i for i, x in enumerate(x_labels)}
        if len(x_index) != len(x_labels):
            raise InvalidMappingError("domain labels must be distinct")
        y_index = {y: j for j, y in enumerate(y_labels)}
        if len(y_index) != len(y_labels):
            raise InvalidMappingError("codomain labels must be distinct")
        bits = []
        for x in x_labels:
            try:
                members = images[x]
            except KeyError:
                raise InvalidMappingError(f"no image given for {x!r}") from None
            b = 0
            for y in members:
                j = y_index.get(y)
                if j is None:
                    raise InvalidMappingError(
                        f"image of {x!r} contains {y!r}, which is not in the codomain")
                b |= 1 << j
            bits.append(b)
        self.x_labels = x_labels
        self.y_labels = y_labels
        self.image_bits = tuple(bits)
        self._x_index = x_index
        self._y_index = y_index

    @classmethod
    def from_dict(cls, images: Mapping[Label, Iterable[Label]], *,
                  y_order: Iterable[Label] | None = None) -> "FiniteMapping":
        """Build a mapping from ``{x: iterable of y}``.

        The domain order is the insertion order of ``images``.  The codomain
        is ``y_order`` when given; otherwise it is inferred as the union of
        the images, sorted when the labels are sortable (set-typed images
        have no usable insertion order) and in first-appearance order
        otherwise.
        """
        materialized = {x: tuple(members) for x, members in images.items()}
        x_labels = tuple(materialized)
        if y_order is not None:
            y_labels = tuple(y_order)
        else:
            seen: dict[Label, None] = {}
            for x in x_labels:
                for y in materialized[x]:
                    seen.setdefault(y)
            try:
                y_labels = tuple(sorted(seen))
            except TypeError:
                y_labels = tuple(seen)
        return cls(x_labels, y_labels, materialized)

    @classmethod
    def _raw(cls, x_labels: tuple, y_labels: tuple, image_bits: tuple) -> "FiniteMapping":
        # Internal fast path: trusts that the parts already satisfy the invariants.
        obj = object.__new__(cls)
        obj.x_labels = x_labels
        obj.y_labels = y_labels
        obj.image_bits = image_bits
        obj._x_index = {x: i for i, x in enumerate(x_labels)}
        obj._y_index = {y: j for j, y in enumerate(y_labels)}
        return obj

    # -- label / bitset conversions -------------------------------------

    @property
    def full_x_bits(self) -> int:
        return (1 << len(self.x_labels)) - 1

    def x_bits(self, members: Iterable[Label]) -> int:
        """Bitset of a subset of X given by labels; unknown labels are an error."""
        bits = 0
        for x in members:
            i = self._x_index.get(x)
            if i is None:
                raise DomainError(f"{x!r} is not in the domain")
            bits |= 1 << i
        return bits

    def y_bits(self, members: Iterable[Label]) -> int:
        bits = 0
        for y in members:
            j = self._y_index.get(y)
            if j is None:
                raise DomainError(f"{y!r} is not in the codomain")
            bits |= 1 << j
        return bits

    def x_labels_of(self, bits: int) -> tuple:
        return tuple(self.x_labels[i] for i in bit_indices(bits))

    def y_labels_of(self, bits: int) -> tuple:
        return tuple(self.y_labels[j] for j in bit_indices(bits))

    def image_bits_of(self, w_bits: int) -> int:
        """Union of the images over the members of a domain bitset."""
        img = 0
        for i in bit_indices(w_bits):
            img |= self.image_bits[i]
        return img

    # -- label-level accessors -------------------------------------------

    def image(self, x: Label) -> frozenset:
        """The image of a single domain element, as a set of labels."""
        i = self._x_index.get(x)
        if i is None:
            raise DomainError(f"{x!r} is not in the domain")
        return frozenset(self.y_labels_of(self.image_bits[i]))

    def images_by_label(self) -> dict:
        return {x: frozenset(self.y_labels_of(b))
                for x, b in zip(self.x_labels, self.image_bits)}

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, FiniteMapping):
            return NotImplemented
        return (self.x_labels == other.x_labels
                and self.y_labels == other.y_labels
                and self.image_bits == other.image_bits)

    def __hash__(self) -> int:
        return hash((self.x_labels, self.y_labels, self.image_bits))

    def __repr__(self) -> str:
        body = ", ".join(f"{x!r}: {set(self.y_labels_of(b)) or '{}'}"
                         for x, b in zip(self.x_labels, self.image_bits))
        return f"FiniteMapping({{{body}}})"


def image_of_set(mapping: FiniteMapping, members: Iterable[Label]) -> frozenset:
    """The image of a subset of the domain: the union of its members' images.

    The empty subset has the empty image.
    """
    bits = mapping.x_bits(members)
    return frozenset(mapping.y_labels_of(mapping.image_bits_of(bits)))


def complement(mapping: FiniteMapping, drop_x: Iterable[Label],
               drop_y: Iterable[Label]) -> FiniteMapping:
    """Drop ``drop_x`` from the domain and strike ``drop_y`` from every image.

    The result maps X minus ``drop_x`` into subsets of Y minus ``drop_y``;
    images may come out empty.  Dropping the whole domain is rejected, since
    a mapping needs a nonempty domain.
    """
    w = mapping.x_bits(drop_x)
    z = mapping.y_bits(drop_y)
    if w == mapping.full_x_bits:
        raise DomainError("cannot drop the entire domain")
    keep_y = [j for j in range(len(mapping.y_labels)) if not (z >> j) & 1]
    new_pos = {j: p for p, j in enumerate(keep_y)}
    y_labels = tuple(mapping.y_labels[j] for j in keep_y)
    x_labels = []
    image_bits = []
    for i, x in enumerate(mapping.x_labels):
        if (w >> i) & 1:
            continue
        x_labels.append(x)
        b = mapping.image_bits[i] & ~z
        nb = 0
        for j in bit_indices(b):
            nb |= 1 << new_pos[j]
        image_bits.append(nb)
    return FiniteMapping._raw(tuple(x_labels), y_labels, tuple(image_bits))


def residual(mapping: FiniteMapping, members: Iterable[Label]) -> FiniteMapping:
    """Restrict away a subset of the domain together with everything it can map to.

    Equivalent to ``complement(mapping, W, image_of_set(mapping, W))``; the
    images that remain are the values only the rest of the domain can take.
    """
    members = tuple(members)
    return complement(mapping, members, image_of_set(mapping, members))


def is_critical(mapping: FiniteMapping, members: Iterable[Label]) -> bool:
    """Whether a nonempty subset has an image of exactly its own size."""
    bits = mapping.x_bits(members)
    if bits == 0:
        return False
    return mapping.image_bits_of(bits).bit_count() == bits.bit_count()


def is_non_reducible(mapping: FiniteMapping, members: Iterable[Label]) -> bool:
    """Whether a nonempty subset contains no proper nonempty critical subset.

    Decided by exhaustive enumeration of all proper subsets; this is the
    reference semantics used for validation, not a fast path.  Subsets of
    sets larger than ``ENUMERATION_CAP`` are refused.
    """
    bits = mapping.x_bits(members)
    if bits == 0:
        return False
    indices = list(bit_indices(bits))
    if len(indices) > ENUMERATION_CAP:
        raise SizeCapError(
            f"non-reducibility check over {len(indices)} elements exceeds the "
            f"cap of {ENUMERATION_CAP}")
    for size in range(1, len(indices)):
        for combo in combinations(indices, size):
            img = 0
            for i in combo:
                img |= mapping.image_bits[i]
            if img.bit_count() == size:
                return False
    return True


def min_image_size(mapping: FiniteMapping) -> int:
    """The smallest image size over the domain.

    Every critical set must be at least this large, which lets the partition
    scan skip the smaller subset sizes outright.
    """
    return min(b.bit_count() for b in mapping.image_bits)
