import itertools
import random
import stat
import sys
import textwrap

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import formulas
from iolsat.formula import BOTTOM, TOP, And, Atom, Not, Or
from iolsat.logic import entails
from iolsat.oracle import tt_satisfiable
from iolsat.sat import (
    DPLLSolver,
    ExternalSolver,
    active_solver,
    clausify,
    find_model,
    parse_dimacs,
    solve,
    to_dimacs,
    using_solver,
)

a, b = Atom("a"), Atom("b")


def brute_force(clauses, n):
    for bits in itertools.product((False, True), repeat=n):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in c) for c in clauses):
            return True
    return False


def random_clauses(rng, n):
    clauses = []
    for _ in range(rng.randint(0, 4 * n)):
        width = rng.randint(1, 4)
        clauses.append(tuple(rng.choice((-1, 1)) * rng.randint(1, n) for _ in range(width)))
    return clauses


def satisfies(model, clauses):
    return all(any(model[abs(l)] == (l > 0) for l in c) for c in clauses)


def test_solver_examples():
    assert DPLLSolver().solve([], 0) == {}
    assert DPLLSolver().solve([()], 1) is None
    assert DPLLSolver().solve([(1,), (-1,)], 1) is None
    model = DPLLSolver().solve([(1, 2), (-1,)], 2)
    assert model == {1: False, 2: True}


def test_random_clause_sets_agree_with_truth_tables():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 10)
        clauses = random_clauses(rng, n)
        model = DPLLSolver().solve(clauses, n)
        assert (model is not None) == brute_force(clauses, n)
        if model is not None:
            assert satisfies(model, clauses)


def test_clausify_atoms_first():
    cnf = clausify([Or(a, b), Not(a)])
    assert cnf.atom_vars == {"a": 1, "b": 2}
    assert cnf.num_vars >= 2
    model = solve(cnf.clauses, cnf.num_vars)
    assert cnf.decode(model) == {"a": False, "b": True}


def test_clausify_constants():
    assert find_model([TOP]) is not None
    assert find_model([BOTTOM]) is None
    assert find_model([Or(a, BOTTOM), Not(a)]) is None


def test_clausify_groups():
    cnf = clausify([a, Not(a), b], groups=["x", "y", "z"])
    assert solve(cnf.select(["x", "z"]), cnf.num_vars) is not None
    assert solve(cnf.select(["x", "y"]), cnf.num_vars) is None


@settings(max_examples=150)
@given(st.lists(formulas(max_leaves=6), max_size=4))
def test_clausify_equisatisfiable(fs):
    model = find_model(fs)
    assert (model is not None) == tt_satisfiable(fs)
    if model is not None:
        from iolsat.formula import evaluate, vocabulary

        full = {name: model.get(name, False) for name in vocabulary(fs)}
        assert all(evaluate(f, full) for f in fs)


def test_dimacs_round_trip():
    clauses = [(1, -2), (2, 3, -1), (-3,)]
    text = to_dimacs(clauses, 3)
    assert text.startswith("p cnf 3 3")
    assert parse_dimacs("c comment\n" + text) == (clauses, 3)


@pytest.fixture
def fake_solver(tmp_path):
    script = tmp_path / "bf_solver"
    script.write_text(
        textwrap.dedent(
            f"""\
            #!{sys.executable}
            import itertools, sys
            clauses, cur, n = [], [], 0
            for line in open(sys.argv[1]):
                if line.startswith(("c", "p")):
                    if line.startswith("p"):
                        n = int(line.split()[2])
                    continue
                for t in map(int, line.split()):
                    if t == 0:
                        clauses.append(cur); cur = []
                    else:
                        cur.append(t)
            for bits in itertools.product((False, True), repeat=n):
                if all(any(bits[abs(l) - 1] == (l > 0) for l in c) for c in clauses):
                    print("s SATISFIABLE")
                    print("v " + " ".join(str(i + 1 if x else -(i + 1)) for i, x in enumerate(bits)) + " 0")
                    sys.exit(10)
            print("s UNSATISFIABLE")
            sys.exit(20)
            """
        )
    )
    script.chmod(script.stat().st_mode | stat.S_IEXEC)
    return str(script)


def test_external_solver(fake_solver):
    solver = ExternalSolver(fake_solver)
    assert solver.solve([(1,), (-1,)], 1) is None
    assert solver.solve([(1, 2), (-1,)], 2) == {1: False, 2: True}
    with using_solver(solver):
        assert active_solver() is solver
        assert entails([a, Or(Not(a), b)], b)
        assert not entails([Or(a, b)], a)
    assert isinstance(active_solver(), DPLLSolver)


def test_external_solver_without_answer(tmp_path):
    script = tmp_path / "silent"
    script.write_text("#!/bin/sh\nexit 0\n")
    script.chmod(0o755)
    with pytest.raises(RuntimeError):
        ExternalSolver(str(script)).solve([(1,)], 1)
