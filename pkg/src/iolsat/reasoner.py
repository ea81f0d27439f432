"""End-to-end reasoning over a parsed problem."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .constrained import maxfamily, outfamily, aggregate, pref_family, resolve_constraints
from .detachment import NormSet, basis_for
from .formula import Formula
from .logic import entails, is_consistent
from .tptp import Problem


@dataclass
class Outcome:
    basis: tuple[Formula, ...]
    consistent: bool
    # (conjecture name, whether it is in the output)
    verdicts: list[tuple[str, bool]] = field(default_factory=list)
    maxfamily: Optional[list[NormSet]] = None
    preferred: Optional[list[NormSet]] = None


def compute_basis(problem: Problem) -> tuple[tuple[Formula, ...], Optional[list], Optional[list]]:
    spec = problem.spec
    if spec.constrained is None:
        return basis_for(spec.operator, problem.norms, problem.inputs, spec.throughput), None, None
    constraints = resolve_constraints(spec.constraints, problem.inputs)
    family = maxfamily(spec.operator, problem.norms, problem.inputs, constraints, spec.throughput)
    preferred = pref_family(spec.preference, family)
    bases = outfamily(
        spec.operator, problem.norms, problem.inputs, constraints, spec.throughput, preferred
    )
    return aggregate(spec.constrained, bases), family, preferred


def reason(problem: Problem) -> Outcome:
    """Compute the output basis once, then decide every conjecture against it."""
    basis, family, preferred = compute_basis(problem)
    verdicts = [(name, entails(basis, goal)) for name, goal in problem.conjectures]
    return Outcome(basis, is_consistent(basis), verdicts, family, preferred)
