"""Kostant's partition function and its q-analogue in type A.

The positive roots of sl_n are e_i - e_j for i < j, ordered
lexicographically in (i, j). P_q(alpha) sums q^(number of roots) over all
multisets of positive roots adding up to alpha.
"""
from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import InvalidInputError
from .partitions import IntVector
from .qpoly import QPolynomial, add, eval_at_one, scale_shift


@dataclass(frozen=True)
class RootSystemA:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInputError("n must be positive")

    @property
    def index_pairs(self) -> tuple[tuple[int, int], ...]:
        """0-based (i, j) with i < j, lexicographic."""
        return tuple(itertools.combinations(range(self.n), 2))

    @property
    def positive_roots(self) -> tuple[IntVector, ...]:
        roots = []
        for i, j in self.index_pairs:
            v = [0] * self.n
            v[i], v[j] = 1, -1
            roots.append(IntVector(v))
        return tuple(roots)


_ZERO = QPolynomial()
_ONE = QPolynomial.one()


class KostantPartitionFunction:
    """q-analogue of Kostant's partition function for a fixed rank.

    The recursion peels off the first remaining root r:
    ``P(alpha; r, rest...) = P(alpha; rest...) + q * P(alpha - r; r, rest...)``.
    Results are memoized on (alpha, root index) unless ``memoize=False``.
    ``entry_bound``, when set, declares any state with an entry of absolute
    value above it unreachable; the caller is responsible for its validity.
    """

    def __init__(self, n: int, memoize: bool = True, entry_bound: Optional[int] = None):
        self.roots = RootSystemA(n)
        self.n = n
        self.memoize = memoize
        self.entry_bound = entry_bound
        self._pairs = self.roots.index_pairs
        self._cache: dict[tuple[tuple[int, ...], int], QPolynomial] = {}
        self._lock = threading.Lock()

    def clear_cache(self) -> None:
        with self._lock:
            self._cache.clear()

    def cache_size(self) -> int:
        return len(self._cache)

    def __call__(self, alpha: Sequence[int]) -> QPolynomial:
        alpha = tuple(alpha)
        if len(alpha) != self.n:
            raise InvalidInputError(f"alpha must have length {self.n}, got {len(alpha)}")
        if sum(alpha) != 0:
            return _ZERO
        return self._eval(alpha, 0)

    def _eval(self, alpha: tuple[int, ...], t: int) -> QPolynomial:
        if t == len(self._pairs):
            return _ONE if not any(alpha) else _ZERO
        first = self._pairs[t][0]
        # coordinates left of `first` are untouched by every remaining root
        if any(alpha[:first]):
            return _ZERO
        acc = 0
        for a in alpha:
            acc += a
            if acc < 0:
                return _ZERO
        if self.entry_bound is not None and any(abs(a) > self.entry_bound for a in alpha):
            return _ZERO

        key = (alpha, t)
        if self.memoize:
            hit = self._cache.get(key)
            if hit is not None:
                return hit

        i, j = self._pairs[t]
        result = self._eval(alpha, t + 1)
        if alpha[i] > 0:
            shifted = list(alpha)
            shifted[i] -= 1
            shifted[j] += 1
            result = add(result, scale_shift(self._eval(tuple(shifted), t), 1, 1))

        if self.memoize:
            with self._lock:
                self._cache[key] = result
        return result


_default: dict[int, KostantPartitionFunction] = {}
_default_lock = threading.Lock()


def _function_for(n: int) -> KostantPartitionFunction:
    with _default_lock:
        fn = _default.get(n)
        if fn is None:
            fn = _default[n] = KostantPartitionFunction(n)
        return fn


def clear_caches() -> None:
    """Drop the memo tables of the shared per-rank evaluators."""
    with _default_lock:
        for fn in _default.values():
            fn.clear_cache()


def kostant_partition_q(alpha: Sequence[int], n: int) -> QPolynomial:
    return _function_for(n)(alpha)


def kostant_partition(alpha: Sequence[int], n: int) -> int:
    return eval_at_one(kostant_partition_q(alpha, n))


def permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(
        1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b]
    )
    return -1 if inversions % 2 else 1


def signed_permutations(n: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """All permutations of 1..n in lexicographic order, paired with their sign."""
    if n < 1:
        raise InvalidInputError("n must be positive")
    for perm in itertools.permutations(range(1, n + 1)):
        yield perm, permutation_sign(perm)


def act(perm: Sequence[int], v: Sequence[int]) -> IntVector:
    """Permute entries: position i of the result holds v[perm[i] - 1]."""
    return IntVector(v[p - 1] for p in perm)
