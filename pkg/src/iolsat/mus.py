"""Enumeration of all minimal unsatisfiable subsets (MUSes).

The search follows the MARCO scheme.  A *map* formula over one selector
variable per group tracks the unexplored part of the power set.  Each seed
drawn from the map is checked: unsatisfiable seeds are shrunk to a MUS and
everything above it is blocked; satisfiable seeds are grown to a maximal
satisfiable subset and everything below it is blocked.  The map becomes
unsatisfiable exactly when every MUS has been reported.
"""

from __future__ import annotations

from typing import Hashable, Sequence

from .formula import Formula
from .sat import clausify, solve


class _SubsetChecker:
    def __init__(self, groups: Sequence[tuple[Hashable, Formula]]):
        self.size = len(groups)
        self.cnf = clausify([f for _, f in groups], groups=list(range(self.size)))
        self.calls = 0

    def sat(self, subset) -> bool:
        self.calls += 1
        return solve(self.cnf.select(subset), self.cnf.num_vars) is not None

    def shrink(self, seed: set[int]) -> frozenset[int]:
        current = set(seed)
        for i in sorted(seed):
            current.discard(i)
            if self.sat(current):
                current.add(i)
        return frozenset(current)

    def grow(self, seed: set[int]) -> frozenset[int]:
        current = set(seed)
        for i in range(self.size):
            if i not in current:
                current.add(i)
                if not self.sat(current):
                    current.discard(i)
        return frozenset(current)


def enumerate_muses(groups: Sequence[tuple[Hashable, Formula]]) -> list[frozenset]:
    """All MUSes of the grouped formulas, as frozensets of group ids.

    Group ids must be distinct.  The result is ordered by size, then by the
    positions of the member groups, so repeated runs agree.
    """
    ids = [gid for gid, _ in groups]
    if len(set(ids)) != len(ids):
        raise ValueError("group ids must be distinct")
    checker = _SubsetChecker(groups)
    n = checker.size
    blocking: list[tuple[int, ...]] = []
    found: list[frozenset[int]] = []
    while True:
        model = solve(blocking, n)
        if model is None:
            break
        seed = {i for i in range(n) if model.get(i + 1, False)}
        if checker.sat(seed):
            mss = checker.grow(seed)
            blocking.append(tuple(i + 1 for i in range(n) if i not in mss))
        else:
            mus = checker.shrink(seed)
            blocking.append(tuple(-(i + 1) for i in sorted(mus)))
            found.append(mus)
    found.sort(key=lambda m: (len(m), sorted(m)))
    return [frozenset(ids[i] for i in mus) for mus in found]
