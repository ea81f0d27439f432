"""Finite bases for the unconstrained output operators.

Every ``basis*`` function returns a tuple of formulas whose classical
consequences are exactly the output of the corresponding operator.
"""

from __future__ import annotations

import collections
import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .formula import Formula, Not, Or, disjoin, format_formula, unique
from .logic import entails, is_consistent
from .mus import enumerate_muses


@dataclass(frozen=True)
class Norm:
    """Conditional obligation: given ``body``, it ought to be ``head``."""

    name: str
    body: Formula
    head: Formula


class NormSet:
    """Ordered collection of norms with distinct names.

    Norms are told apart by name only, so two norms carrying the same
    formulas are still separate members.
    """

    __slots__ = ("_norms", "_by_name")

    def __init__(self, norms: Iterable[Norm] = ()):
        self._norms = tuple(norms)
        self._by_name = {n.name: n for n in self._norms}
        if len(self._by_name) != len(self._norms):
            counts = collections.Counter(n.name for n in self._norms)
            dups = sorted(name for name, k in counts.items() if k > 1)
            raise ValueError(f"duplicate norm name(s): {', '.join(dups)}")

    def __iter__(self) -> Iterator[Norm]:
        return iter(self._norms)

    def __len__(self) -> int:
        return len(self._norms)

    def __contains__(self, item) -> bool:
        if isinstance(item, Norm):
            return self._by_name.get(item.name) == item
        return item in self._by_name

    def __getitem__(self, name: str) -> Norm:
        return self._by_name[name]

    def __eq__(self, other) -> bool:
        return isinstance(other, NormSet) and self._norms == other._norms

    def __hash__(self) -> int:
        return hash(self._norms)

    def __repr__(self) -> str:
        return f"NormSet({list(self.names)})"

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n.name for n in self._norms)

    def heads(self) -> tuple[Formula, ...]:
        return unique(n.head for n in self._norms)

    def bodies(self) -> tuple[Formula, ...]:
        return unique(n.body for n in self._norms)

    def restrict(self, names: Iterable[str]) -> "NormSet":
        """Members named in ``names``, in this set's order."""
        keep = set(names)
        return NormSet(n for n in self._norms if n.name in keep)

    def without(self, names: Iterable[str]) -> "NormSet":
        drop = set(names)
        return NormSet(n for n in self._norms if n.name not in drop)


class Operator(enum.Enum):
    OUT1 = "out1"
    OUT2 = "out2"
    OUT3 = "out3"
    OUT4 = "out4"

    def __str__(self) -> str:
        return self.value


def _sorted_printed(formulas: Iterable[Formula]) -> list[Formula]:
    return sorted(unique(formulas), key=format_formula)


def directly_triggered(inputs: Iterable[Formula], norms: Iterable[Norm]) -> NormSet:
    """Norms whose body follows from ``inputs``."""
    inputs = list(inputs)
    return NormSet(n for n in norms if entails(inputs, n.body))


def basis1(norms: NormSet, inputs: Iterable[Formula]) -> tuple[Formula, ...]:
    """Simple-minded output: heads of the directly triggered norms."""
    return tuple(_sorted_printed(directly_triggered(inputs, norms).heads()))


def triggering_rounds(norms: NormSet, inputs: Iterable[Formula]) -> Iterator[NormSet]:
    """Successive sets of newly triggered norms of the reusable fixed point.

    Input grows by the heads of each round; only norms not triggered so far
    are re-examined.  Iteration stops when a round triggers nothing.
    """
    augmented = list(inputs)
    triggered = directly_triggered(augmented, norms)
    seen: set[str] = set()
    while len(triggered):
        yield triggered
        seen.update(triggered.names)
        augmented.extend(triggered.heads())
        triggered = directly_triggered(augmented, norms.without(seen))


def basis3(norms: NormSet, inputs: Iterable[Formula]) -> tuple[Formula, ...]:
    """Reusable output by fixed-point iteration of direct triggering."""
    heads: list[Formula] = []
    for new in triggering_rounds(norms, inputs):
        heads.extend(_sorted_printed(new.heads()))
    return unique(heads)


def weakly_triggered_sets(inputs: Iterable[Formula], norms: NormSet) -> list[NormSet]:
    """Norm sets whose body disjunction is entailed, read off MUSes.

    The MUSes are taken over ``inputs`` together with the negated bodies,
    one group per input formula and one per distinct body.  A MUS that
    contains negated bodies stands for all norms carrying those bodies.
    Includes every minimally weakly triggered set, possibly with some
    non-minimal ones.
    """
    inputs = unique(inputs)
    if not is_consistent(inputs):
        return [norms.restrict([n.name]) for n in norms]
    bodies = norms.bodies()
    groups = [(("input", i), f) for i, f in enumerate(inputs)]
    groups += [(("body", j), Not(b)) for j, b in enumerate(bodies)]
    result = []
    for mus in enumerate_muses(groups):
        chosen = {bodies[j] for kind, j in mus if kind == "body"}
        if chosen:
            result.append(NormSet(n for n in norms if n.body in chosen))
    return result


def weak_output(norms: Iterable[Norm]) -> Formula:
    """Disjunction of the heads, without repeated disjuncts."""
    return disjoin(unique(n.head for n in norms))


def basis2(norms: NormSet, inputs: Iterable[Formula]) -> tuple[Formula, ...]:
    """Basic output: weak outputs of the weakly triggered sets.

    When several norms in a set share a body, one weak output is emitted
    per choice of a single norm for each body; choices using more norms
    are entailed by these and left out.
    """
    out: list[Formula] = []
    for wts in weakly_triggered_sets(inputs, norms):
        per_body: dict[Formula, list[Norm]] = {}
        for n in wts:
            per_body.setdefault(n.body, []).append(n)
        choices = [weak_output(pick) for pick in itertools.product(*per_body.values())]
        out.extend(_sorted_printed(choices))
    return unique(out)


def materialize(norms: Iterable[Norm]) -> tuple[Formula, ...]:
    """Material counterparts ``~body | head`` of the norms."""
    return unique(Or(Not(n.body), n.head) for n in norms)


def basis4(norms: NormSet, inputs: Iterable[Formula]) -> tuple[Formula, ...]:
    """Basic reusable output, via basic output on the materialized input."""
    return basis2(norms, unique([*inputs, *materialize(norms)]))


def basis_throughput(op: Operator, norms: NormSet, inputs: Iterable[Formula]) -> tuple[Formula, ...]:
    inputs = unique(inputs)
    if op is Operator.OUT1:
        return unique(inputs + basis1(norms, inputs))
    if op is Operator.OUT3:
        return unique(inputs + basis3(norms, inputs))
    # out2+ and out4+ both collapse to the classical closure of A and m(N).
    return unique(inputs + materialize(norms))


_BASES = {
    Operator.OUT1: basis1,
    Operator.OUT2: basis2,
    Operator.OUT3: basis3,
    Operator.OUT4: basis4,
}


def basis_for(
    op: Operator, norms: NormSet, inputs: Iterable[Formula], throughput: bool = False
) -> tuple[Formula, ...]:
    """Finite basis of ``out(norms, inputs)`` for the chosen operator."""
    op = Operator(op)
    if throughput:
        return basis_throughput(op, norms, inputs)
    return _BASES[op](norms, list(inputs))


ALL_OPERATIONS: Sequence[tuple[Operator, bool]] = (
    (Operator.OUT1, False),
    (Operator.OUT2, False),
    (Operator.OUT3, False),
    (Operator.OUT4, False),
    (Operator.OUT1, True),
    (Operator.OUT2, True),
    (Operator.OUT3, True),
)
"""The seven distinct operations (out4+ coincides with out2+)."""
