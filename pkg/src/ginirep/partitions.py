"""Partitions, compositions, words and Young-diagram operations.

Partitions are always stored zero-padded to an explicit length, so "a
partition of s with at most n parts" is a weakly decreasing tuple of
exactly n non-negative integers.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from .errors import InvalidInputError


def _as_ints(values: Iterable[int], what: str) -> tuple[int, ...]:
    out = tuple(values)
    for v in out:
        if isinstance(v, bool) or not isinstance(v, int):
            raise InvalidInputError(f"{what} entries must be integers, got {v!r}")
    return out


class IntVector(tuple):
    """Fixed-length integer tuple with unrestricted signs (weights, rho)."""

    def __new__(cls, entries: Iterable[int] = ()):
        return super().__new__(cls, _as_ints(entries, "IntVector"))

    def __add__(self, other):
        if len(self) != len(other):
            raise InvalidInputError("vectors must have equal length")
        return IntVector(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        if len(self) != len(other):
            raise InvalidInputError("vectors must have equal length")
        return IntVector(a - b for a, b in zip(self, other))

    def __repr__(self) -> str:
        return f"IntVector({tuple(self)!r})"


class Composition(tuple):
    """Tuple of non-negative integers with no ordering constraint."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = _as_ints(parts, "Composition")
        if any(p < 0 for p in parts):
            raise InvalidInputError(f"composition parts must be non-negative: {parts}")
        return super().__new__(cls, parts)

    def total(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Composition({tuple(self)!r})"


class Partition(Composition):
    """Weakly decreasing tuple of non-negative integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        if any(self[i] < self[i + 1] for i in range(len(self) - 1)):
            raise InvalidInputError(f"partition parts must be weakly decreasing: {tuple(self)}")
        return self

    def padded(self, length: int) -> Partition:
        """Return the partition zero-padded (or zero-trimmed) to `length` entries."""
        if any(self[length:]):
            raise InvalidInputError(f"{tuple(self)} has more than {length} nonzero parts")
        return Partition(tuple(self[:length]) + (0,) * (length - len(self)))

    def num_nonzero(self) -> int:
        return sum(1 for p in self if p)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


class Word(tuple):
    """Integer sequence; words of compositions use letters 0..n-1."""

    def __new__(cls, letters: Iterable[int] = ()):
        return super().__new__(cls, _as_ints(letters, "Word"))

    def __repr__(self) -> str:
        return f"Word({tuple(self)!r})"


def partitions_of(total: int, max_parts: int) -> Iterator[Partition]:
    """Yield every partition of `total` into at most `max_parts` parts.

    Each is zero-padded to length `max_parts`. Order is lexicographically
    decreasing, starting from (total, 0, ..., 0).
    """
    if total < 0 or max_parts < 1:
        raise InvalidInputError("need total >= 0 and max_parts >= 1")

    def rec(remaining: int, slots: int, cap: int) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        # the largest part must leave enough room: remaining <= first * slots
        lo = -(-remaining // slots)
        for first in range(min(cap, remaining), lo - 1, -1):
            for rest in rec(remaining - first, slots - 1, first):
                yield (first,) + rest

    for parts in rec(total, max_parts, total):
        yield Partition(parts)


def flat_partition(k: int, n: int) -> Partition:
    """The flat partition (k^n)."""
    return Partition((k,) * n)


def dominates(mu: Partition, lam: Partition) -> bool:
    """True iff every prefix sum of `mu` is at least that of `lam`."""
    if len(mu) != len(lam):
        raise InvalidInputError(f"lengths differ: {len(mu)} vs {len(lam)}")
    if sum(mu) != sum(lam):
        raise InvalidInputError(f"totals differ: {sum(mu)} vs {sum(lam)}")
    acc_mu = acc_lam = 0
    for a, b in zip(mu, lam):
        acc_mu += a
        acc_lam += b
        if acc_mu < acc_lam:
            return False
    return True


def word_of(mu: Composition) -> Word:
    """Weakly increasing word with letter i repeated mu[i] times (0-based)."""
    return Word(letter for letter, count in enumerate(mu) for _ in range(count))


def diagram_cells(word: Word) -> set[tuple[int, int]]:
    """Cells (row, column) of the left-justified diagram with ascending row lengths `word`.

    Rows are counted from the top in English coordinates. The last letter of
    the word is the top row, so the first letter is the bottom row.
    """
    rows = len(word)
    return {
        (rows - 1 - i, c)
        for i, length in enumerate(word)
        for c in range(length)
    }


def diagram_symmetric_difference(a: Word, b: Word) -> int:
    """Number of cells in exactly one of the two word diagrams."""
    if len(a) != len(b):
        raise InvalidInputError(f"words must have equal length: {len(a)} vs {len(b)}")
    # rows are aligned bottom-up, so row i contributes |a_i - b_i|
    return sum(abs(x - y) for x, y in zip(a, b))
