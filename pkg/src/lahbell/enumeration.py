"""Brute-force enumeration of the counted structures, independent of all formulas.

These generators build every structure explicitly, one at a time, so the
counts they produce depend on nothing but the combinatorial definitions.
They are the ground truth the triangle recurrences are checked against.

Canonical form: a partition is a tuple of blocks listed in increasing order
of least element, so each structure is generated exactly once.  Blocks of a
set partition are sorted ascending; blocks of an ordered partition are
sequences whose internal order matters.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterator

__all__ = [
    "ENUMERATION_BOUNDS",
    "iter_set_partitions",
    "iter_ordered_partitions",
    "count_set_partitions",
    "count_ordered_partitions",
    "count_permutations_by_cycles",
    "cycle_count",
]

# Per-enumerator caps keep a full run in the seconds range; structure counts
# grow faster than factorially beyond them.
ENUMERATION_BOUNDS = {
    "ordered_partitions": 10,
    "set_partitions": 12,
    "permutation_cycles": 9,
}

Partition = tuple[tuple[int, ...], ...]


def _check_bound(n: int, which: str) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"element count must be a nonnegative integer, got {n!r}")
    bound = ENUMERATION_BOUNDS[which]
    if n > bound:
        raise ValueError(f"{which} enumeration is capped at n = {bound}, got {n}")


def iter_set_partitions(n: int) -> Iterator[Partition]:
    """All partitions of {1..n} into nonempty unordered blocks.

    Element m either joins an existing block or opens a new one after all
    blocks holding smaller elements, so blocks stay sorted by least element
    and ascending inside, and no structure repeats.
    """
    _check_bound(n, "set_partitions")

    def extend(blocks: list[list[int]], label: int) -> Iterator[Partition]:
        if label > n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(label)
            yield from extend(blocks, label + 1)
            b.pop()
        blocks.append([label])
        yield from extend(blocks, label + 1)
        blocks.pop()

    yield from extend([], 1)


def iter_ordered_partitions(n: int) -> Iterator[Partition]:
    """All partitions of {1..n} into nonempty internally ordered blocks.

    Element m is placed at any of the len(block)+1 positions of any existing
    block, or opens a new block.  Removing the largest element inverts the
    construction uniquely, so enumeration is duplicate-free.
    """
    _check_bound(n, "ordered_partitions")

    def extend(blocks: list[list[int]], label: int) -> Iterator[Partition]:
        if label > n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            for pos in range(len(b) + 1):
                b.insert(pos, label)
                yield from extend(blocks, label + 1)
                b.pop(pos)
        blocks.append([label])
        yield from extend(blocks, label + 1)
        blocks.pop()

    yield from extend([], 1)


def count_set_partitions(n: int) -> dict[int, int]:
    """Counts by block count; entry k is the number of k-block partitions."""
    counts: dict[int, int] = {}
    for partition in iter_set_partitions(n):
        k = len(partition)
        counts[k] = counts.get(k, 0) + 1
    return dict(sorted(counts.items()))


def count_ordered_partitions(n: int) -> dict[int, int]:
    """Counts by block count over ordered-block partitions."""
    counts: dict[int, int] = {}
    for partition in iter_ordered_partitions(n):
        k = len(partition)
        counts[k] = counts.get(k, 0) + 1
    return dict(sorted(counts.items()))


def cycle_count(perm: tuple[int, ...]) -> int:
    """Number of cycles of a permutation given in one-line notation on 0..n-1."""
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return cycles


def count_permutations_by_cycles(n: int) -> dict[int, int]:
    """Counts of permutations of n elements by number of cycles."""
    _check_bound(n, "permutation_cycles")
    counts: dict[int, int] = {}
    for perm in permutations(range(n)):
        k = cycle_count(perm)
        counts[k] = counts.get(k, 0) + 1
    return dict(sorted(counts.items()))
