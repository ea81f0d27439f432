"""SAT-based reasoning for unconstrained and constrained input/output logics."""

from .constrained import (
    SAME_AS_INPUT,
    Aggregation,
    Preference,
    aggregate,
    maxfamily,
    outfamily,
    pref_family,
    prefout,
)
from .detachment import (
    Norm,
    NormSet,
    Operator,
    basis1,
    basis2,
    basis3,
    basis4,
    basis_for,
    basis_throughput,
    directly_triggered,
    materialize,
    weakly_triggered_sets,
)
from .formula import BOTTOM, TOP, And, Atom, Bottom, Formula, Iff, Implies, Not, Or, Top, format_formula
from .logic import entails, equivalent, is_consistent, theory_join, theory_meet
from .mus import enumerate_muses
from .reasoner import Outcome, reason
from .tptp import InputError, ParseError, Problem, parse_formula, parse_problem, read_problem

