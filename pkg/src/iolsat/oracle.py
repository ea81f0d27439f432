"""Brute-force semantics of the output operators over small vocabularies.

A test witness that shares nothing with the SAT path except the formula
type.  Complete sets of formulas are represented by truth-value assignments
to the instance's atoms; the inconsistent complete set (the whole language)
is represented separately.  Each operator is reduced to a *family* of
finite formula sets whose consequence sets intersect to the output:

* out1 / out3: a single set, the heads of the (iteratively) triggered norms;
* out2 / out4: one set ``N(V)`` per valuation ``V`` of the input (for out4
  only valuations that also satisfy every ``body -> head``), plus the set of
  all heads for the inconsistent complete set.

Throughput variants add the input to the detached set: ``A`` itself for
out1/out3, the full valuation for out2/out4 (a complete set is its own
input).
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from .detachment import Norm, Operator
from .formula import BOTTOM, Atom, Formula, Not, evaluate, vocabulary

DEFAULT_MAX_ATOMS = 12


class VocabularyTooLarge(ValueError):
    pass


def valuations(names: Sequence[str]) -> Iterator[dict[str, bool]]:
    for bits in itertools.product((False, True), repeat=len(names)):
        yield dict(zip(names, bits))


def tt_satisfiable(formulas: Iterable[Formula]) -> bool:
    formulas = list(formulas)
    names = vocabulary(formulas)
    return any(all(evaluate(f, v) for f in formulas) for v in valuations(names))


def tt_entails(premises: Iterable[Formula], goal: Formula) -> bool:
    return not tt_satisfiable([*premises, Not(goal)])


def _check_size(formulas: Sequence[Formula], max_atoms: int) -> tuple[str, ...]:
    names = vocabulary(formulas)
    if len(names) > max_atoms:
        raise VocabularyTooLarge(f"{len(names)} atoms exceed the bound of {max_atoms}")
    return names


def _literals(valuation: dict[str, bool]) -> list[Formula]:
    return [Atom(k) if val else Not(Atom(k)) for k, val in valuation.items()]


def detached_family(
    op: Operator,
    norms: Sequence[Norm],
    inputs: Sequence[Formula],
    throughput: bool = False,
    max_atoms: int = DEFAULT_MAX_ATOMS,
) -> list[list[Formula]]:
    """Formula sets whose consequence sets intersect to ``out(norms, inputs)``."""
    op = Operator(op)
    norms, inputs = list(norms), list(inputs)
    names = _check_size(
        [*inputs, *(n.body for n in norms), *(n.head for n in norms)], max_atoms
    )
    all_heads = [n.head for n in norms]

    if op in (Operator.OUT1, Operator.OUT3):
        triggered: list[Norm] = []
        known = list(inputs)
        while True:
            new = [n for n in norms if n not in triggered and tt_entails(known, n.body)]
            triggered += new
            if op is Operator.OUT1 or not new:
                break
            known += [n.head for n in new]
        detached = [n.head for n in triggered]
        return [detached + inputs if throughput else detached]

    family = []
    for v in valuations(names):
        if not all(evaluate(f, v) for f in inputs):
            continue
        fired = [n for n in norms if evaluate(n.body, v)]
        if op is Operator.OUT4 and not all(evaluate(n.head, v) for n in fired):
            continue
        detached = [n.head for n in fired]
        family.append(detached + _literals(v) if throughput else detached)
    # The inconsistent complete set triggers every norm.
    family.append([BOTTOM] if throughput else all_heads)
    return family


def oracle_member(
    op: Operator,
    norms: Sequence[Norm],
    inputs: Sequence[Formula],
    phi: Formula,
    throughput: bool = False,
    max_atoms: int = DEFAULT_MAX_ATOMS,
) -> bool:
    """Whether ``phi`` belongs to ``out(norms, inputs)``, by exhaustive evaluation."""
    _check_size([*inputs, phi, *(n.body for n in norms), *(n.head for n in norms)], max_atoms)
    family = detached_family(op, norms, inputs, throughput, max_atoms)
    return all(tt_entails(detached, phi) for detached in family)


def oracle_consistent(
    op: Operator,
    norms: Sequence[Norm],
    inputs: Sequence[Formula],
    constraints: Sequence[Formula],
    throughput: bool = False,
    max_atoms: int = DEFAULT_MAX_ATOMS,
) -> bool:
    """Whether ``out(norms, inputs)`` is consistent with ``constraints``.

    The models of an intersection of theories are the union of their
    models, so some member of the family must be jointly satisfiable with
    the constraints.
    """
    family = detached_family(op, norms, inputs, throughput, max_atoms)
    return any(tt_satisfiable([*detached, *constraints]) for detached in family)


def oracle_maxfamily(
    op: Operator,
    norms: Sequence[Norm],
    inputs: Sequence[Formula],
    constraints: Sequence[Formula],
    throughput: bool = False,
) -> set[frozenset[str]]:
    """Maximal consistent norm subsets by enumerating all ``2^|N|`` subsets."""
    norms = list(norms)
    good = []
    for k in range(len(norms) + 1):
        for subset in itertools.combinations(norms, k):
            if oracle_consistent(op, subset, inputs, constraints, throughput):
                good.append(frozenset(n.name for n in subset))
    return {s for s in good if not any(s < t for t in good)}


def naive_muses(formulas: Sequence[Formula]) -> set[frozenset[int]]:
    """MUSes as index sets, by checking every subset with truth tables."""
    unsat = []
    for k in range(len(formulas) + 1):
        for idx in itertools.combinations(range(len(formulas)), k):
            if not any(set(m) <= set(idx) for m in unsat):
                if not tt_satisfiable(formulas[i] for i in idx):
                    unsat.append(frozenset(idx))
    return set(unsat)
