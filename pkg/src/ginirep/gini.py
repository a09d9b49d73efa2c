"""Discrete Gini index, weighted total and discrete Lorenz curves.

All quantities are exact integers: they are areas of lattice regions and
are never normalized.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from math import comb

from .errors import InvalidInputError
from .partitions import Partition, flat_partition


@dataclass(frozen=True)
class LorenzCurve:
    """Integer samples (j, L(j)) for j = 0..n; L is constant on (j-1, j]."""

    samples: tuple[tuple[int, int], ...]

    def values(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.samples)

    def to_csv(self, header: bool = False) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if header:
            writer.writerow(["j", "value"])
        writer.writerows(self.samples)
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps([list(s) for s in self.samples])


def weighted_total(lam: Partition) -> int:
    """b(lam) = sum over i of (i-1) * lam_i, with 1-based i."""
    return sum(i * part for i, part in enumerate(lam))


def gini(lam: Partition) -> int:
    """Gini index of a partition of n, zero-padded to n parts."""
    n = len(lam)
    if sum(lam) != n:
        raise InvalidInputError(f"gini needs a partition of n={n} with n parts, got total {sum(lam)}")
    return comb(n, 2) - weighted_total(lam)


def _check_general(lam: Partition, n: int, k: int) -> None:
    if n < 1 or k < 0:
        raise InvalidInputError("need n >= 1 and k >= 0")
    if len(lam) != n:
        raise InvalidInputError(f"partition must have length n={n}, got {len(lam)}")
    if sum(lam) != n * k:
        raise InvalidInputError(f"partition total {sum(lam)} != n*k = {n * k}")


def gini_general(lam: Partition, n: int, k: int) -> int:
    """Generalized Gini index g_{nk,n}(lam) = b((k^n)) - b(lam)."""
    _check_general(lam, n, k)
    return weighted_total(flat_partition(k, n)) - weighted_total(lam)


def lorenz_curve(lam: Partition) -> LorenzCurve:
    """Cumulative wealth of the j poorest parts, for j = 0..n."""
    samples = [(0, 0)]
    acc = 0
    for j, part in enumerate(reversed(lam), start=1):
        acc += part
        samples.append((j, acc))
    return LorenzCurve(tuple(samples))


def gini_via_area(lam: Partition, n: int, k: int) -> int:
    """Area between the line of equality and the Lorenz curve, summed stepwise."""
    _check_general(lam, n, k)
    return sum(j * k - value for j, value in lorenz_curve(lam).samples[1:])
