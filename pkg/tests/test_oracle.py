import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import candidate_pool, random_instance
from iolsat.detachment import ALL_OPERATIONS, Norm, NormSet, Operator, basis_for
from iolsat.formula import And, Atom, Not, Or
from iolsat.logic import entails
from iolsat.oracle import (
    VocabularyTooLarge,
    naive_muses,
    oracle_consistent,
    oracle_maxfamily,
    oracle_member,
    tt_entails,
)

a, b, x, y, z = (Atom(n) for n in "abxyz")
EXAMPLE = NormSet([Norm("n1", a, x), Norm("n2", b, y), Norm("n3", And(x, y), z)])


def test_example_by_oracle():
    assert oracle_member(Operator.OUT1, EXAMPLE, [a, b], And(x, y))
    assert not oracle_member(Operator.OUT1, EXAMPLE, [a, b], z)
    assert oracle_member(Operator.OUT3, EXAMPLE, [a, b], z)
    assert not oracle_member(Operator.OUT1, EXAMPLE, [Or(a, b)], Or(x, y))
    assert not oracle_member(Operator.OUT3, EXAMPLE, [Or(a, b)], Or(x, y))
    assert oracle_member(Operator.OUT2, EXAMPLE, [Or(a, b)], Or(x, y))
    assert not oracle_member(Operator.OUT2, EXAMPLE, [Or(a, b)], x)
    assert oracle_member(Operator.OUT4, EXAMPLE, [Or(a, b)], Or(x, y))
    assert not oracle_member(Operator.OUT4, EXAMPLE, [Or(a, b)], z)


def test_throughput_by_oracle():
    assert oracle_member(Operator.OUT2, EXAMPLE, [Or(a, b)], Or(a, b), True)
    assert oracle_member(Operator.OUT1, EXAMPLE, [a], a, True)
    assert not oracle_member(Operator.OUT1, EXAMPLE, [a], a, False)


def test_naive_muses():
    assert naive_muses([a, Or(a, b), Atom("c")]) == set()
    assert naive_muses([a, Not(a), Or(Not(a), b), Not(b)]) == {
        frozenset({0, 1}),
        frozenset({0, 2, 3}),
    }


def test_vocabulary_bound():
    norms = NormSet([Norm("n", a, x)])
    with pytest.raises(VocabularyTooLarge):
        oracle_member(Operator.OUT1, norms, [a], b, max_atoms=2)


def test_oracle_maxfamily_simple():
    nx = Atom("nx")
    norms = NormSet([Norm("p", a, x), Norm("q", a, nx)])
    fam = oracle_maxfamily(Operator.OUT1, norms, [a], [Or(x, nx)])
    assert fam == {frozenset({"p", "q"})}
    fam = oracle_maxfamily(Operator.OUT1, norms, [a], [Not(And(x, nx))])
    assert fam == {frozenset({"p"}), frozenset({"q"})}
    assert oracle_consistent(Operator.OUT1, NormSet(), [a], [Not(a)])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_operator_inclusions(seed):
    rng = random.Random(seed)
    names, norms, inputs = random_instance(rng)
    for phi in candidate_pool(rng, names, norms, 10):
        if oracle_member(Operator.OUT1, norms, inputs, phi):
            assert oracle_member(Operator.OUT3, norms, inputs, phi)
            assert oracle_member(Operator.OUT2, norms, inputs, phi)
        if oracle_member(Operator.OUT2, norms, inputs, phi):
            assert oracle_member(Operator.OUT4, norms, inputs, phi)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_bases_agree_with_oracle(seed):
    rng = random.Random(seed)
    names, norms, inputs = random_instance(rng)
    pool = candidate_pool(rng, names, norms)
    for op, thru in ALL_OPERATIONS:
        base = basis_for(op, norms, inputs, thru)
        for phi in pool:
            assert entails(base, phi) == oracle_member(op, norms, inputs, phi, thru), (
                op,
                thru,
                phi,
            )
