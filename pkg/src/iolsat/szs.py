"""SZS-style result text."""

from __future__ import annotations

import collections

from .formula import format_formula
from .reasoner import Outcome
from .tptp import Problem


def status_line(status: str, source: str, detail: str = "") -> str:
    line = f"% SZS status {status} for {source}"
    return f"{line}: {detail}" if detail else line


def basis_lines(outcome: Outcome) -> list[str]:
    """Formula list body; an inconsistent basis is shown as ``$false``."""
    if not outcome.consistent:
        return ["$false"]
    return [format_formula(f) for f in outcome.basis]


def conjecture_labels(names: list[str]) -> list[str]:
    """Conjecture names, with ``#k`` appended to the k-th reuse of a name."""
    seen: collections.Counter = collections.Counter()
    labels = []
    for name in names:
        seen[name] += 1
        labels.append(name if seen[name] == 1 else f"{name}#{seen[name]}")
    return labels


def write_results(problem: Problem, outcome: Outcome, print_basis: bool = False) -> str:
    source = problem.source_name
    lines = []
    if not outcome.verdicts or print_basis:
        if not outcome.verdicts:
            lines.append(status_line("Success", source))
        lines.append(f"% SZS output start ListOfFormulae for {source}")
        lines += basis_lines(outcome)
        lines.append(f"% SZS output end ListOfFormulae for {source}")
    labels = conjecture_labels([name for name, _ in outcome.verdicts])
    for label, (_, proved) in zip(labels, outcome.verdicts):
        lines.append(status_line("Theorem" if proved else "CounterSatisfiable", source, label))
    return "\n".join(lines) + "\n"
