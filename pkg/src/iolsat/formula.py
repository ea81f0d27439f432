"""Propositional formulas.

Formulas are immutable trees built from frozen dataclasses, so structural
equality and hashing come for free and values can be shared freely.
Printing uses the TPTP connective syntax (``~ & | => <=>``); the output of
:func:`format_formula` parses back to a structurally equal formula.
"""

from __future__ import annotations

import re
import sys
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

LOWER_WORD = re.compile(r"[a-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Top:
    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True)
class Bottom:
    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True)
class Atom:
    name: str

    def __post_init__(self) -> None:
        # Interning keeps equal names pointing at one string object.
        object.__setattr__(self, "name", sys.intern(self.name))

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Not:
    arg: "Formula"

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return format_formula(self)


Formula = Union[Top, Bottom, Atom, Not, And, Or, Implies, Iff]
BINARY = (And, Or, Implies, Iff)

TOP = Top()
BOTTOM = Bottom()

_SYMBOL = {And: "&", Or: "|", Implies: "=>", Iff: "<=>"}


def conjoin(formulas: Iterable[Formula]) -> Formula:
    """Left-nested conjunction; the empty conjunction is ``$true``."""
    result = None
    for f in formulas:
        result = f if result is None else And(result, f)
    return TOP if result is None else result


def disjoin(formulas: Iterable[Formula]) -> Formula:
    """Left-nested disjunction; the empty disjunction is ``$false``."""
    result = None
    for f in formulas:
        result = f if result is None else Or(result, f)
    return BOTTOM if result is None else result


def unique(formulas: Iterable[Formula]) -> tuple[Formula, ...]:
    """Drop structural duplicates, keeping first occurrences in order."""
    return tuple(dict.fromkeys(formulas))


def atoms(formula: Formula) -> Iterator[str]:
    """Yield atom names in depth-first, left-to-right order (with repeats)."""
    stack = [formula]
    while stack:
        f = stack.pop()
        if isinstance(f, Atom):
            yield f.name
        elif isinstance(f, Not):
            stack.append(f.arg)
        elif isinstance(f, BINARY):
            stack.append(f.right)
            stack.append(f.left)


def vocabulary(formulas: Iterable[Formula]) -> tuple[str, ...]:
    """Distinct atom names of ``formulas`` in order of first occurrence."""
    return tuple(dict.fromkeys(name for f in formulas for name in atoms(f)))


def evaluate(formula: Formula, valuation) -> bool:
    """Truth value of ``formula`` under a mapping from atom names to bools."""
    if isinstance(formula, Atom):
        return valuation[formula.name]
    if isinstance(formula, Top):
        return True
    if isinstance(formula, Bottom):
        return False
    if isinstance(formula, Not):
        return not evaluate(formula.arg, valuation)
    left = evaluate(formula.left, valuation)
    if isinstance(formula, And):
        return left and evaluate(formula.right, valuation)
    if isinstance(formula, Or):
        return left or evaluate(formula.right, valuation)
    if isinstance(formula, Implies):
        return (not left) or evaluate(formula.right, valuation)
    if isinstance(formula, Iff):
        return left == evaluate(formula.right, valuation)
    raise TypeError(f"not a formula: {formula!r}")


def format_formula(formula: Formula) -> str:
    """Render ``formula`` in TPTP syntax with minimal parentheses.

    ``&`` and ``|`` chains nested to the left print without parentheses
    because the parser reads them left-associatively; every other nested
    binary formula is parenthesised.
    """
    if isinstance(formula, Atom):
        return formula.name
    if isinstance(formula, Top):
        return "$true"
    if isinstance(formula, Bottom):
        return "$false"
    if isinstance(formula, Not):
        inner = format_formula(formula.arg)
        if isinstance(formula.arg, BINARY):
            inner = f"({inner})"
        return f"~{inner}"
    op = type(formula)
    left = format_formula(formula.left)
    if isinstance(formula.left, BINARY) and not (
        op in (And, Or) and type(formula.left) is op
    ):
        left = f"({left})"
    right = format_formula(formula.right)
    if isinstance(formula.right, BINARY):
        right = f"({right})"
    return f"{left} {_SYMBOL[op]} {right}"
