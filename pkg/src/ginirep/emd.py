"""One-dimensional earth mover's distance between compositions.

A move shifts one unit between adjacent piles i and i+1. The distance is
computed as the symmetric difference of the Young diagrams of the two
words; a breadth-first search over the move graph serves as an oracle.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from math import comb

from .errors import InvalidInputError, ResourceLimitError
from .gini import weighted_total
from .partitions import Composition, Partition, diagram_symmetric_difference, dominates, word_of

# bidirectional search kicks in above this many reachable states
BIDIRECTIONAL_THRESHOLD = 10**5
# hard cap on the number of compositions the oracle will explore
MAX_ORACLE_STATES = 2 * 10**6


@dataclass(frozen=True)
class EmdResult:
    mu: Composition
    lam: Composition
    distance: int

    def to_dict(self) -> dict:
        return {"mu": list(self.mu), "lambda": list(self.lam), "distance": self.distance}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _check_pair(mu, lam) -> tuple[Composition, Composition]:
    mu, lam = Composition(mu), Composition(lam)
    if len(mu) != len(lam):
        raise InvalidInputError(f"compositions need equal length: {len(mu)} vs {len(lam)}")
    if sum(mu) != sum(lam):
        raise InvalidInputError(f"compositions need equal totals: {sum(mu)} vs {sum(lam)}")
    if not mu:
        raise InvalidInputError("compositions need at least one part")
    return mu, lam


def emd(mu: Composition, lam: Composition) -> EmdResult:
    mu, lam = _check_pair(mu, lam)
    return EmdResult(mu, lam, diagram_symmetric_difference(word_of(mu), word_of(lam)))


def emd_majorized(mu: Partition, lam: Partition) -> int:
    """EMD between partitions where `mu` dominates `lam`: b(lam) - b(mu).

    The dominated partition has the larger weighted total, so the
    difference is taken in that order to stay non-negative.
    """
    mu, lam = Partition(mu), Partition(lam)
    _check_pair(mu, lam)
    if not dominates(mu, lam):
        raise InvalidInputError(f"{tuple(mu)} does not dominate {tuple(lam)}")
    return weighted_total(lam) - weighted_total(mu)


def _neighbours(state: tuple[int, ...]):
    for i in range(len(state) - 1):
        if state[i]:
            nxt = list(state)
            nxt[i] -= 1
            nxt[i + 1] += 1
            yield tuple(nxt)
        if state[i + 1]:
            nxt = list(state)
            nxt[i + 1] -= 1
            nxt[i] += 1
            yield tuple(nxt)


def emd_bfs_oracle(mu: Composition, lam: Composition) -> int:
    """Shortest number of adjacent single-unit moves turning `mu` into `lam`.

    The state space is all compositions of s into n parts,
    C(s+n-1, n-1) of them; larger spaces raise ResourceLimitError.
    """
    mu, lam = _check_pair(mu, lam)
    s, n = sum(mu), len(mu)
    states = comb(s + n - 1, n - 1)
    if states > MAX_ORACLE_STATES:
        raise ResourceLimitError(f"{states} states exceeds oracle bound {MAX_ORACLE_STATES}")
    start, goal = tuple(mu), tuple(lam)
    if start == goal:
        return 0
    if states > BIDIRECTIONAL_THRESHOLD:
        return _bidirectional(start, goal)

    dist = {start: 0}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in _neighbours(cur):
            if nxt not in dist:
                dist[nxt] = dist[cur] + 1
                if nxt == goal:
                    return dist[nxt]
                queue.append(nxt)
    raise AssertionError("move graph is connected; goal must be reachable")


def _bidirectional(start: tuple[int, ...], goal: tuple[int, ...]) -> int:
    # moves are reversible, so the same neighbour function serves both frontiers
    seen = ({start: 0}, {goal: 0})
    frontiers = ([start], [goal])
    while frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        mine, other = seen[side], seen[1 - side]
        nxt_frontier = []
        best = None
        for cur in frontiers[side]:
            for nxt in _neighbours(cur):
                if nxt in mine:
                    continue
                mine[nxt] = mine[cur] + 1
                if nxt in other:
                    cand = mine[nxt] + other[nxt]
                    best = cand if best is None else min(best, cand)
                nxt_frontier.append(nxt)
        if best is not None:
            return best
        frontiers = (nxt_frontier, frontiers[1]) if side == 0 else (frontiers[0], nxt_frontier)
    raise AssertionError("move graph is connected; goal must be reachable")
