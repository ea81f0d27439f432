"""Propositional satisfiability: clausification, a DPLL kernel, DIMACS I/O.

Literals are non-zero ints in DIMACS convention.  :func:`clausify` turns
formulas into a :class:`Cnf` whose clauses remember which source formula
(group) produced them, which is what MUS enumeration needs to switch groups
on and off.

The module keeps a context-local *active solver*.  The built-in
:class:`DPLLSolver` is the default; :class:`ExternalSolver` hands DIMACS to
any SAT-competition style binary.  Swap with :func:`using_solver`.
"""

from __future__ import annotations

import contextlib
import contextvars
import os
import subprocess
import tempfile
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Optional, Protocol, Sequence

from .formula import (
    And,
    Atom,
    Bottom,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Top,
    vocabulary,
)

Clause = tuple[int, ...]
Model = dict[int, bool]


@dataclass
class Cnf:
    """Clauses tagged with an optional group id.

    ``atom_vars`` maps atom names to variables ``1..len(atom_vars)``;
    Tseitin definition variables are numbered above them.
    """

    clauses: list[Clause] = field(default_factory=list)
    groups: list[Optional[Hashable]] = field(default_factory=list)
    atom_vars: dict[str, int] = field(default_factory=dict)
    num_vars: int = 0

    def add(self, clause: Iterable[int], group: Optional[Hashable] = None) -> None:
        lits = tuple(dict.fromkeys(clause))
        if any(-lit in lits for lit in lits):
            return  # tautologous
        self.clauses.append(lits)
        self.groups.append(group)

    def select(self, groups) -> list[Clause]:
        """Untagged clauses plus those whose group is in ``groups``."""
        return [c for c, g in zip(self.clauses, self.groups) if g is None or g in groups]

    def decode(self, model: Model) -> dict[str, bool]:
        return {name: model.get(var, False) for name, var in self.atom_vars.items()}


class _Encoder:
    def __init__(self, cnf: Cnf):
        self.cnf = cnf
        self._true: Optional[int] = None

    def fresh(self) -> int:
        self.cnf.num_vars += 1
        return self.cnf.num_vars

    def true_lit(self) -> int:
        if self._true is None:
            self._true = self.fresh()
            self.cnf.add((self._true,))
        return self._true

    def encode(self, f: Formula, group, memo: dict) -> int:
        if f in memo:
            return memo[f]
        add = self.cnf.add
        if isinstance(f, Atom):
            lit = self.cnf.atom_vars[f.name]
        elif isinstance(f, Top):
            lit = self.true_lit()
        elif isinstance(f, Bottom):
            lit = -self.true_lit()
        elif isinstance(f, Not):
            lit = -self.encode(f.arg, group, memo)
        else:
            a = self.encode(f.left, group, memo)
            b = self.encode(f.right, group, memo)
            lit = self.fresh()
            if isinstance(f, And):
                add((-lit, a), group)
                add((-lit, b), group)
                add((lit, -a, -b), group)
            elif isinstance(f, Or):
                add((-lit, a, b), group)
                add((lit, -a), group)
                add((lit, -b), group)
            elif isinstance(f, Implies):
                add((-lit, -a, b), group)
                add((lit, a), group)
                add((lit, -b), group)
            elif isinstance(f, Iff):
                add((-lit, -a, b), group)
                add((-lit, a, -b), group)
                add((lit, a, b), group)
                add((lit, -a, -b), group)
            else:
                raise TypeError(f"not a formula: {f!r}")
        memo[f] = lit
        return lit


def clausify(formulas: Iterable[Formula], groups: Optional[Sequence[Hashable]] = None) -> Cnf:
    """Equisatisfiable CNF of ``formulas`` (Tseitin encoding).

    If ``groups`` is given, every clause produced for ``formulas[i]`` is
    tagged ``groups[i]``.  Definitions are not shared between groups, so
    dropping a group's clauses removes exactly that formula.
    """
    formulas = list(formulas)
    if groups is None:
        groups = [None] * len(formulas)
    elif len(groups) != len(formulas):
        raise ValueError("groups and formulas differ in length")
    cnf = Cnf()
    for i, name in enumerate(vocabulary(formulas), start=1):
        cnf.atom_vars[name] = i
    cnf.num_vars = len(cnf.atom_vars)
    encoder = _Encoder(cnf)
    for f, g in zip(formulas, groups):
        root = encoder.encode(f, g, {})
        cnf.add((root,), g)
    return cnf


class DPLLSolver:
    """Complete DPLL search with two watched literals.

    Branching is deterministic: lowest unassigned variable, true first.
    Backtracking is chronological, there is no clause learning.
    """

    def solve(self, clauses: Sequence[Clause], num_vars: int = 0) -> Optional[Model]:
        return _DPLL(clauses, num_vars).run()


class _DPLL:
    def __init__(self, clauses: Sequence[Clause], num_vars: int):
        n = max([num_vars] + [abs(lit) for c in clauses for lit in c])
        self.n = n
        self.value = [0] * (n + 1)  # 1 true, -1 false, 0 unassigned
        self.trail: list[int] = []
        self.qhead = 0
        self.watches: dict[int, list[int]] = {}
        self.clauses: list[list[int]] = []
        self.units: list[int] = []
        self.empty = False
        for clause in clauses:
            lits = list(dict.fromkeys(clause))
            if any(-lit in lits for lit in lits):
                continue
            if not lits:
                self.empty = True
            elif len(lits) == 1:
                self.units.append(lits[0])
            else:
                idx = len(self.clauses)
                self.clauses.append(lits)
                self.watches.setdefault(lits[0], []).append(idx)
                self.watches.setdefault(lits[1], []).append(idx)

    def lit_value(self, lit: int) -> int:
        v = self.value[abs(lit)]
        return v if lit > 0 else -v

    def assign(self, lit: int) -> None:
        self.value[abs(lit)] = 1 if lit > 0 else -1
        self.trail.append(lit)

    def propagate(self) -> bool:
        while self.qhead < len(self.trail):
            false_lit = -self.trail[self.qhead]
            self.qhead += 1
            watchers = self.watches.get(false_lit)
            if not watchers:
                continue
            i = 0
            while i < len(watchers):
                c = self.clauses[watchers[i]]
                if c[0] == false_lit:
                    c[0], c[1] = c[1], c[0]
                if self.lit_value(c[0]) == 1:
                    i += 1
                    continue
                for k in range(2, len(c)):
                    if self.lit_value(c[k]) != -1:
                        c[1], c[k] = c[k], c[1]
                        self.watches.setdefault(c[1], []).append(watchers[i])
                        watchers[i] = watchers[-1]
                        watchers.pop()
                        break
                else:
                    if self.lit_value(c[0]) == -1:
                        return False
                    if self.lit_value(c[0]) == 0:
                        self.assign(c[0])
                    i += 1
        return True

    def run(self) -> Optional[Model]:
        if self.empty:
            return None
        for lit in self.units:
            val = self.lit_value(lit)
            if val == -1:
                return None
            if val == 0:
                self.assign(lit)
        # Each entry: (trail length before the decision, decision literal, already flipped).
        decisions: list[tuple[int, int, bool]] = []
        next_var = 1
        while True:
            if not self.propagate():
                while decisions and decisions[-1][2]:
                    decisions.pop()
                if not decisions:
                    return None
                mark, lit, _ = decisions.pop()
                self.undo(mark)
                decisions.append((mark, -lit, True))
                self.assign(-lit)
                next_var = 1
                continue
            while next_var <= self.n and self.value[next_var] != 0:
                next_var += 1
            if next_var > self.n:
                return {v: self.value[v] == 1 for v in range(1, self.n + 1)}
            decisions.append((len(self.trail), next_var, False))
            self.assign(next_var)

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            self.value[abs(self.trail.pop())] = 0
        self.qhead = mark


def to_dimacs(clauses: Sequence[Clause], num_vars: int = 0) -> str:
    """DIMACS CNF text: ``p cnf`` header then zero-terminated clauses."""
    n = max([num_vars] + [abs(lit) for c in clauses for lit in c])
    lines = [f"p cnf {n} {len(clauses)}"]
    lines += [" ".join(map(str, c)) + " 0" for c in clauses]
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> tuple[list[Clause], int]:
    """Read DIMACS CNF; returns the clauses and the declared variable count."""
    clauses: list[Clause] = []
    num_vars = 0
    current: list[int] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line[0] in "c%":
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad DIMACS header: {line!r}")
            num_vars = int(parts[2])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if current:
        clauses.append(tuple(current))
    return clauses, num_vars


class ExternalSolver:
    """Run a SAT-competition style solver binary on a DIMACS file.

    The answer is read from the ``s``/``v`` lines, falling back to the
    conventional exit codes 10 (SAT) and 20 (UNSAT).
    """

    def __init__(self, path: str, args: Sequence[str] = ()):
        self.path = path
        self.args = list(args)

    def solve(self, clauses: Sequence[Clause], num_vars: int = 0) -> Optional[Model]:
        n = max([num_vars] + [abs(lit) for c in clauses for lit in c])
        fd, name = tempfile.mkstemp(suffix=".cnf")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(to_dimacs(clauses, n))
            proc = subprocess.run(
                [self.path, *self.args, name], capture_output=True, text=True
            )
        finally:
            os.unlink(name)
        status = None
        true_lits: set[int] = set()
        for line in proc.stdout.splitlines():
            if line.startswith("s "):
                status = line[2:].strip()
            elif line.startswith("v "):
                true_lits.update(int(t) for t in line[2:].split() if t != "0")
        if status is None:
            status = {10: "SATISFIABLE", 20: "UNSATISFIABLE"}.get(proc.returncode)
        if status == "UNSATISFIABLE":
            return None
        if status != "SATISFIABLE":
            raise RuntimeError(
                f"external solver {self.path!r} gave no answer (exit {proc.returncode})"
            )
        return {v: v in true_lits for v in range(1, n + 1)}


class Solver(Protocol):
    def solve(self, clauses: Sequence[Clause], num_vars: int = 0) -> Optional[Model]: ...


_active: contextvars.ContextVar[Solver] = contextvars.ContextVar(
    "iolsat_solver", default=DPLLSolver()
)


def active_solver() -> Solver:
    return _active.get()


@contextlib.contextmanager
def using_solver(solver: Solver) -> Iterator[Solver]:
    token = _active.set(solver)
    try:
        yield solver
    finally:
        _active.reset(token)


def solve(clauses: Sequence[Clause], num_vars: int = 0) -> Optional[Model]:
    """Satisfying assignment of ``clauses`` or ``None`` if unsatisfiable."""
    return active_solver().solve(clauses, num_vars)


def find_model(formulas: Iterable[Formula]) -> Optional[dict[str, bool]]:
    """A model of ``formulas`` over their atoms, or ``None``."""
    cnf = clausify(formulas)
    model = solve(cnf.clauses, cnf.num_vars)
    return None if model is None else cnf.decode(model)
