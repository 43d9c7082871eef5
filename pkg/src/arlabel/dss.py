"""Distinct-subset-sum (DSS) primitives.

A set of positive integers is DSS when all 2^n of its subset sums are
pairwise distinct (the empty subset contributes sum 0).  Achievable sums of
a partial set are kept as a bitmap packed into a single Python int: bit s is
set iff some subset sums to s.  Adding an element a maps the occupancy
``bits`` to ``bits | (bits << a)``, and the extension preserves distinctness
iff the two halves do not overlap.  This costs O(n * total) bit operations
instead of 2^n sum enumeration, which is what makes the check usable inside
solver inner loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

# Element sums must stay inside a 64-bit machine word; beyond that the
# occupancy bitmap is no longer a sane representation.
MAX_TOTAL = 2**63 - 1


def _checked_elements(elements: Iterable[int]) -> tuple[int, ...]:
    """Sort and validate: positive, distinct, total within MAX_TOTAL."""
    elems = tuple(sorted(elements))
    total = 0
    prev = 0
    for a in elems:
        if a < 1:
            raise ValueError(f"element {a} is not a positive integer")
        if a == prev:
            raise ValueError(f"duplicate element {a}")
        prev = a
        total += a
    if total > MAX_TOTAL:
        raise OverflowError(f"element sum {total} exceeds 64-bit range")
    return elems


def _occupancy(elems: tuple[int, ...]) -> int:
    bits = 1
    for a in elems:
        bits |= bits << a
    return bits


@dataclass(frozen=True)
class SumBitset:
    """Occupancy bitmap over achievable subset sums of an integer set.

    ``bits`` has bit s set iff some subset sums to s; ``total`` is the sum of
    all elements, i.e. the index of the highest set bit.  Immutable: extending
    returns a new value.
    """

    bits: int
    total: int

    @classmethod
    def empty(cls) -> "SumBitset":
        return cls(bits=1, total=0)

    def popcount(self) -> int:
        return self.bits.bit_count()

    def can_extend(self, label: int) -> bool:
        """True iff adding ``label`` keeps all subset sums distinct.

        The sums gained are exactly old-sums + label, so distinctness is
        preserved iff the shifted copy is disjoint from the original.
        """
        if label < 1:
            raise ValueError(f"label {label} is not a positive integer")
        return self.bits & (self.bits << label) == 0

    def extended(self, label: int) -> "SumBitset":
        if label < 1:
            raise ValueError(f"label {label} is not a positive integer")
        if self.total + label > MAX_TOTAL:
            raise OverflowError("element sum exceeds 64-bit range")
        return SumBitset(self.bits | (self.bits << label), self.total + label)


@dataclass(frozen=True)
class DssSet:
    """A strictly increasing tuple of positive integers with distinct subset sums.

    Construction validates the full invariant, so a DssSet in hand is a
    certificate: duplicates, non-positive entries and subset-sum collisions
    are all rejected with ValueError.
    """

    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        elems = _checked_elements(self.elements)
        object.__setattr__(self, "elements", elems)
        bits = 1
        for a in elems:
            shifted = bits << a
            if bits & shifted:
                raise ValueError(f"{elems} is not a distinct-subset-sum set")
            bits |= shifted

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, value: int) -> bool:
        return value in self.elements

    @property
    def largest(self) -> int:
        return self.elements[-1]

    def bitset(self) -> SumBitset:
        return SumBitset(_occupancy(self.elements), sum(self.elements))


def is_dss(elements: Iterable[int]) -> bool:
    """Decide whether all 2^n subset sums of ``elements`` are distinct.

    Empty input is trivially DSS.  Raises ValueError on duplicates or
    non-positive entries, OverflowError when the total leaves 64-bit range.
    """
    elems = _checked_elements(elements)
    bits = 1
    for a in elems:
        shifted = bits << a
        if bits & shifted:
            return False
        bits |= shifted
    return True


def sum_bitset(elements: Iterable[int]) -> SumBitset:
    """Occupancy bitmap of every achievable subset sum of ``elements``."""
    elems = _checked_elements(elements)
    return SumBitset(_occupancy(elems), sum(elems))


def can_extend(occupancy: SumBitset, label: int) -> bool:
    """Incremental DSS test: may ``label`` join the set behind ``occupancy``?"""
    return occupancy.can_extend(label)


def enumerate_dss_sets(size: int, cap: int) -> list[DssSet]:
    """All size-element DSS subsets of {1..cap}, in lexicographic order.

    The recursion only ever stands on DSS prefixes (every subset of a DSS set
    is DSS), so pruning with the incremental test is exact.
    """
    if size < 1:
        raise ValueError(f"size {size} must be at least 1")
    if size > cap:
        raise ValueError(f"size {size} exceeds cap {cap}")
    results: list[DssSet] = []
    chosen: list[int] = []

    def extend(start: int, bits: int, remaining: int) -> None:
        if remaining == 0:
            results.append(DssSet(tuple(chosen)))
            return
        for a in range(start, cap - remaining + 2):
            shifted = bits << a
            if bits & shifted:
                continue
            chosen.append(a)
            extend(a + 1, bits | shifted, remaining - 1)
            chosen.pop()

    extend(1, 1, size)
    return results


def subset_sum_collision(
    values: Iterable[int],
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Two distinct index subsets of ``values`` with equal sums, or None.

    Deterministic: scans prefixes left to right, stops at the first element
    whose addition causes a collision, and reports the smallest colliding
    sum there.  The returned subsets are disjoint and re-checkable; indices
    refer to positions in ``values`` (duplicated values are handled, the two
    equal singletons collide).
    """
    vals = tuple(values)
    for a in vals:
        if a < 1:
            raise ValueError(f"value {a} is not a positive integer")
    occs = [1]
    bits = 1
    for j, a in enumerate(vals):
        shifted = bits << a
        overlap = bits & shifted
        if overlap:
            s = (overlap & -overlap).bit_length() - 1
            left = set(_rebuild_subset(vals, occs, j, s))
            right = set(_rebuild_subset(vals, occs, j, s - a)) | {j}
            common = left & right
            return tuple(sorted(left - common)), tuple(sorted(right - common))
        bits |= shifted
        occs.append(bits)
    return None


def _rebuild_subset(
    vals: tuple[int, ...], occs: list[int], limit: int, target: int
) -> list[int]:
    # Walk the prefix occupancies backwards: keep element i only when the
    # target is unreachable without it.
    take: list[int] = []
    for i in range(limit - 1, -1, -1):
        if (occs[i] >> target) & 1:
            continue
        take.append(i)
        target -= vals[i]
    if target != 0:
        raise AssertionError("subset reconstruction failed")
    return take
