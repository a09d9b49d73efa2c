"""Kostka numbers, the charge statistic and Kostka-Foulkes polynomials.

K_{lam,mu}(q) is computed two independent ways: as the charge generating
function over semistandard tableaux, and as the alternating sum over S_n
of the q-Kostant partition function. The graded multiplicity m_alpha(q)
and the degree-equals-Gini sweep are built on top.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import ConsistencyError, InvalidInputError
from .gini import gini_general
from .kostant import act, clear_caches, kostant_partition_q, signed_permutations
from .partitions import Composition, IntVector, Partition, flat_partition, partitions_of
from .qpoly import QPolynomial, add, degree, scale_shift


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        for r in range(len(rows) - 1):
            if len(rows[r]) < len(rows[r + 1]):
                raise InvalidInputError("row lengths must be weakly decreasing")
        for r, row in enumerate(rows):
            if any(v < 1 for v in row):
                raise InvalidInputError("entries must be positive integers")
            if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
                raise InvalidInputError(f"row {r} is not weakly increasing")
            if r and any(rows[r - 1][c] >= row[c] for c in range(len(row))):
                raise InvalidInputError(f"column strictness fails at row {r}")

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    def content(self, n: Optional[int] = None) -> Composition:
        """Letter multiplicities of 1..n (n defaults to the largest entry)."""
        top = max((v for r in self.rows for v in r), default=0)
        n = top if n is None else n
        counts = [0] * n
        for row in self.rows:
            for v in row:
                counts[v - 1] += 1
        return Composition(counts)


def _check_totals(shape: Sequence[int], weight: Sequence[int]) -> None:
    if sum(shape) != sum(weight):
        raise InvalidInputError(f"totals differ: shape {sum(shape)} vs weight {sum(weight)}")


def ssyt_enumerate(shape: Partition, weight: Composition) -> Iterator[Tableau]:
    """Every semistandard tableau of `shape` whose letter i occurs weight[i-1] times.

    Cells are filled row by row, left to right, with the smallest letter
    tried first, so tableaux come out in lexicographic order of their
    row-reading.
    """
    shape = Partition(shape)
    weight = Composition(weight)
    _check_totals(shape, weight)
    lengths = [p for p in shape if p]
    cells = [(r, c) for r, length in enumerate(lengths) for c in range(length)]
    remaining = list(weight)
    grid = [[0] * length for length in lengths]
    nletters = len(weight)

    def fill(idx: int) -> Iterator[Tableau]:
        if idx == len(cells):
            yield Tableau(tuple(tuple(row) for row in grid))
            return
        r, c = cells[idx]
        lo = 1
        if c:
            lo = grid[r][c - 1]
        if r:
            lo = max(lo, grid[r - 1][c] + 1)
        # a letter v sits at most in row v-1 (0-based), columns strictly increase
        for v in range(max(lo, r + 1), nletters + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            grid[r][c] = v
            yield from fill(idx + 1)
            remaining[v - 1] += 1
        grid[r][c] = 0

    yield from fill(0)


def kostka_number(lam: Partition, mu: Composition) -> int:
    return sum(1 for _ in ssyt_enumerate(lam, mu))


def reading_word(t: Tableau) -> tuple[int, ...]:
    """Rows from bottom to top, each read left to right."""
    return tuple(v for row in reversed(t.rows) for v in row)


def _standard_subword_charge(word: list[Optional[int]], top: int) -> int:
    """Extract one standard subword 1..top in place and return its charge."""
    n = len(word)
    pos = max(p for p in range(n) if word[p] == 1)
    word[pos] = None
    index = total = 0
    for letter in range(2, top + 1):
        nxt = next((p for p in range(pos - 1, -1, -1) if word[p] == letter), None)
        if nxt is None:
            nxt = max(p for p in range(n) if word[p] == letter)
            index += 1
        word[nxt] = None
        pos = nxt
        total += index
    return total


def charge(word: Sequence[int], weight: Partition) -> int:
    """Lascoux-Schutzenberger charge of a word with partition content `weight`.

    Standard subwords are peeled off by starting at the rightmost 1 and
    scanning left, cyclically, for 2, 3, ... Within a subword the index
    goes up by one each time the next letter had to be found by wrapping
    around, i.e. lies to the right of its predecessor.
    """
    weight = Partition(weight)
    counts = [0] * len(weight)
    for v in word:
        if not 1 <= v <= len(weight):
            raise InvalidInputError(f"letter {v} outside 1..{len(weight)}")
        counts[v - 1] += 1
    if tuple(counts) != tuple(weight):
        raise InvalidInputError(f"word content {tuple(counts)} != weight {tuple(weight)}")

    work: list[Optional[int]] = list(word)
    remaining = list(counts)
    total = 0
    while any(remaining):
        top = sum(1 for c in remaining if c)
        total += _standard_subword_charge(work, top)
        for letter in range(top):
            remaining[letter] -= 1
    return total


def _pad_pair(lam: Sequence[int], mu: Sequence[int]) -> tuple[Partition, Partition]:
    lam, mu = Partition(lam), Partition(mu)
    _check_totals(lam, mu)
    n = max(len(lam), len(mu))
    return lam.padded(n), mu.padded(n)


def kostka_foulkes_charge(lam: Partition, mu: Partition) -> QPolynomial:
    """Sum of q^charge over semistandard tableaux of shape lam and content mu."""
    lam, mu = _pad_pair(lam, mu)
    # trailing zero letters contribute nothing and would break the content check
    weight = Partition(p for p in mu if p)
    counts: dict[int, int] = {}
    for t in ssyt_enumerate(lam, weight):
        c = charge(reading_word(t), weight)
        counts[c] = counts.get(c, 0) + 1
    if not counts:
        return QPolynomial()
    return QPolynomial(counts.get(d, 0) for d in range(max(counts) + 1))


def _rho(n: int) -> IntVector:
    return IntVector(range(n - 1, -1, -1))


def _alternating_sum(top: IntVector, bottom: IntVector) -> QPolynomial:
    """Sum over w in S_n of sign(w) * P_q(w(top) - bottom)."""
    n = len(top)
    result = QPolynomial()
    for perm, sign in signed_permutations(n):
        term = kostant_partition_q(act(perm, top) - bottom, n)
        if not term.is_zero():
            result = add(result, scale_shift(term, sign, 0))
    return result


def kostka_foulkes_kostant(lam: Partition, mu: Partition) -> QPolynomial:
    """K_{lam,mu}(q) as sum over w of sign(w) P_q(w(lam + rho) - (mu + rho))."""
    lam, mu = _pad_pair(lam, mu)
    rho = _rho(len(lam))
    return _alternating_sum(IntVector(lam) + rho, IntVector(mu) + rho)


def _check_weight(alpha: Sequence[int]) -> IntVector:
    alpha = IntVector(alpha)
    if not alpha:
        raise InvalidInputError("alpha must be non-empty")
    if any(alpha[i] < alpha[i + 1] for i in range(len(alpha) - 1)):
        raise InvalidInputError(f"alpha must be weakly decreasing: {tuple(alpha)}")
    if sum(alpha) != 0:
        raise InvalidInputError(f"alpha must sum to zero, sums to {sum(alpha)}")
    return alpha


def graded_multiplicity(alpha: Sequence[int]) -> QPolynomial:
    """m_alpha(q) = sum over w of sign(w) P_q(w(alpha + rho) - rho).

    Note that alpha = 0 gives 1: the trivial representation sits in
    degree zero.
    """
    alpha = _check_weight(alpha)
    rho = _rho(len(alpha))
    return _alternating_sum(alpha + rho, rho)


@dataclass(frozen=True)
class GradedMultiplicityReport:
    alpha: IntVector
    k: int
    lam: Partition
    polynomial: QPolynomial
    degree: Optional[int]
    gini: int
    theorem1_holds: bool

    def to_dict(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "k": self.k,
            "lambda": list(self.lam),
            "coefficients": list(self.polynomial.coeffs),
            "degree": self.degree,
            "gini": self.gini,
            "theorem1_holds": self.theorem1_holds,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def graded_multiplicity_report(alpha: Sequence[int], k: Optional[int] = None) -> GradedMultiplicityReport:
    """Compute m_alpha(q) through K_{lam,(k^n)}(q) with lam = alpha + (k^n).

    k defaults to |alpha_n|. When alpha is nonzero the direct alternating
    sum is computed as well and must agree.
    """
    alpha = _check_weight(alpha)
    n = len(alpha)
    if k is None:
        k = abs(alpha[-1])
    if k < abs(alpha[-1]):
        raise InvalidInputError(f"k={k} is smaller than |alpha_n|={abs(alpha[-1])}")
    flat = flat_partition(k, n)
    lam = Partition(alpha + IntVector(flat))
    poly = kostka_foulkes_kostant(lam, flat)
    if any(alpha):
        direct = graded_multiplicity(alpha)
        if direct != poly:
            raise ConsistencyError(
                f"m_alpha(q) routes disagree for alpha={tuple(alpha)}: {direct} vs {poly}"
            )
    deg = degree(poly)
    g = gini_general(lam, n, k)
    return GradedMultiplicityReport(
        alpha=alpha, k=k, lam=lam, polynomial=poly, degree=deg, gini=g,
        theorem1_holds=deg is not None and deg == g,
    )


def _report_for(args: tuple[tuple[int, ...], int]) -> GradedMultiplicityReport:
    lam, k = args
    alpha = IntVector(p - k for p in lam)
    return graded_multiplicity_report(alpha, k)


def verify_theorem1(n: int, k: int, workers: Optional[int] = None) -> list[GradedMultiplicityReport]:
    """One report per partition of nk with at most n parts, in enumeration order.

    With ``workers`` > 1 the partitions are evaluated in a process pool; each
    worker keeps its own memo tables and the output order is unchanged.
    """
    if n < 2 or k < 1:
        raise InvalidInputError("need n >= 2 and k >= 1")
    clear_caches()
    jobs = [(tuple(lam), k) for lam in partitions_of(n * k, n)]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_report_for, jobs))
    return [_report_for(job) for job in jobs]
