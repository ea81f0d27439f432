"""Classical entailment and operations on finitely based theories."""

from __future__ import annotations

from typing import Iterable, Sequence

from .formula import BOTTOM, Formula, Not, conjoin, disjoin, unique
from .sat import find_model


def is_consistent(formulas: Iterable[Formula]) -> bool:
    return find_model(formulas) is not None


def entails(premises: Iterable[Formula], goal: Formula) -> bool:
    """``premises |- goal``, decided as unsatisfiability of premises + ~goal."""
    return find_model([*premises, Not(goal)]) is None


def equivalent(left: Iterable[Formula], right: Iterable[Formula]) -> bool:
    """Whether two finite bases have the same consequences."""
    left, right = list(left), list(right)
    return all(entails(left, f) for f in right) and all(entails(right, f) for f in left)


def theory_join(bases: Sequence[Iterable[Formula]]) -> tuple[Formula, ...]:
    """Basis of ``Cn(B1 u ... u Bk)``: plain union."""
    return unique(f for basis in bases for f in basis)


def theory_meet(bases: Sequence[Iterable[Formula]]) -> tuple[Formula, ...]:
    """Basis of ``Cn(B1) n ... n Cn(Bk)``.

    Members shared verbatim by every basis are kept as they are; the
    remainders contribute one disjunction of their conjunctions.  This is
    the ``\\/_i /\\ B_i`` construction with the common part factored out.
    The meet of no theories is the whole language, ``{$false}``.
    """
    bases = [unique(b) for b in bases]
    if not bases:
        return (BOTTOM,)
    common = tuple(f for f in bases[0] if all(f in b for b in bases[1:]))
    rests = [tuple(f for f in b if f not in common) for b in bases]
    if any(not rest for rest in rests):
        return common
    rests = list(dict.fromkeys(rests))
    return unique(common + (disjoin(conjoin(rest) for rest in rests),))
