"""Constrained output: maximal consistent norm subsets and their aggregation."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .detachment import NormSet, Operator, basis_for
from .formula import Formula
from .logic import is_consistent, theory_join, theory_meet


class Aggregation(enum.Enum):
    CREDULOUS = "credulous"
    SKEPTICAL = "skeptical"

    def __str__(self) -> str:
        return self.value


class _SameAsInput:
    def __repr__(self) -> str:
        return "SAME_AS_INPUT"


SAME_AS_INPUT = _SameAsInput()
"""Constraint marker meaning "use the input as the constraints"."""


def resolve_constraints(constraints, inputs: Sequence[Formula]) -> tuple[Formula, ...]:
    if constraints is SAME_AS_INPUT:
        return tuple(inputs)
    return tuple(constraints or ())


@dataclass(frozen=True)
class Preference:
    """Norm preference given as tiers, most preferred first.

    Norms in one tier are equally preferred; any norm not mentioned sits
    in an implicit last tier.
    """

    tiers: tuple[frozenset[str], ...] = ()

    def __post_init__(self) -> None:
        tiers = tuple(frozenset(t) for t in self.tiers)
        object.__setattr__(self, "tiers", tiers)
        seen: set[str] = set()
        for tier in tiers:
            if seen & tier:
                raise ValueError(f"norm(s) in more than one tier: {sorted(seen & tier)}")
            seen |= tier

    @classmethod
    def from_tiers(cls, tiers: Iterable[Iterable[str]]) -> "Preference":
        return cls(tuple(frozenset(t) for t in tiers))

    @property
    def names(self) -> frozenset[str]:
        return frozenset().union(*self.tiers)

    def check(self, norms: NormSet) -> None:
        unknown = sorted(self.names - set(norms.names))
        if unknown:
            raise ValueError(f"preference names unknown norm(s): {', '.join(unknown)}")

    def rank(self, name: str) -> int:
        for i, tier in enumerate(self.tiers):
            if name in tier:
                return i
        return len(self.tiers)

    def prefers(self, better: str, worse: str) -> bool:
        """Strict preference between two norm names."""
        return self.rank(better) < self.rank(worse)

    def dominates(self, first: frozenset[str], second: frozenset[str]) -> bool:
        """Strict lifting of the preference to norm sets.

        ``first`` beats ``second`` when each norm only in ``second`` is
        outranked by some norm only in ``first``, and not the other way round.
        """
        return self._covers(first, second) and not self._covers(second, first)

    def _covers(self, first: frozenset[str], second: frozenset[str]) -> bool:
        only_first, only_second = first - second, second - first
        return all(any(self.prefers(a, b) for a in only_first) for b in only_second)


def maxfamily(
    op: Operator,
    norms: NormSet,
    inputs: Sequence[Formula],
    constraints: Sequence[Formula],
    throughput: bool = False,
) -> list[NormSet]:
    """Maximal subsets of ``norms`` whose output is consistent with ``constraints``.

    Top-down search over the subset lattice: a candidate whose output is
    consistent is accepted, otherwise all subsets one norm smaller join the
    next frontier.  Candidates already covered by an accepted set are
    dropped, which also keeps the result free of non-maximal members.
    """
    inputs, constraints = list(inputs), list(constraints)
    accepted: list[frozenset[str]] = []
    frontier = [frozenset(norms.names)]
    while frontier:
        failed = []
        for names in frontier:
            if any(names <= p for p in accepted):
                continue
            basis = basis_for(op, norms.restrict(names), inputs, throughput)
            if is_consistent([*basis, *constraints]):
                accepted.append(names)
            else:
                failed.append(names)
        nxt: dict[frozenset[str], None] = {}
        for names in failed:
            for drop in norms.restrict(names).names:
                nxt[names - {drop}] = None
        frontier = list(nxt)
    return [norms.restrict(names) for names in accepted]


def outfamily(
    op: Operator,
    norms: NormSet,
    inputs: Sequence[Formula],
    constraints: Sequence[Formula],
    throughput: bool = False,
    family: Optional[Sequence[NormSet]] = None,
) -> list[tuple[Formula, ...]]:
    """One output basis per member of the maxfamily (computed unless given)."""
    if family is None:
        family = maxfamily(op, norms, inputs, constraints, throughput)
    return [basis_for(op, member, inputs, throughput) for member in family]


def aggregate(mode: Aggregation, bases: Sequence[Iterable[Formula]]) -> tuple[Formula, ...]:
    """Credulous output joins the bases, skeptical output meets them."""
    mode = Aggregation(mode)
    if mode is Aggregation.CREDULOUS:
        return theory_join(bases)
    return theory_meet(bases)


def pref_family(preference: Optional[Preference], family: Sequence[NormSet]) -> list[NormSet]:
    """Members of ``family`` not strictly dominated under ``preference``."""
    if preference is None or not preference.tiers:
        return list(family)
    keys = [frozenset(m.names) for m in family]
    return [
        m
        for m, k in zip(family, keys)
        if not any(preference.dominates(other, k) for other in keys if other != k)
    ]


def prefout(
    mode: Aggregation,
    op: Operator,
    norms: NormSet,
    inputs: Sequence[Formula],
    constraints: Sequence[Formula],
    preference: Optional[Preference] = None,
    throughput: bool = False,
) -> tuple[Formula, ...]:
    """Aggregated output over the preferred maximal families."""
    if preference is not None:
        preference.check(norms)
    family = pref_family(preference, maxfamily(op, norms, inputs, constraints, throughput))
    return aggregate(mode, outfamily(op, norms, inputs, constraints, throughput, family))
