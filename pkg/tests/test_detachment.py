import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_instance
from iolsat.detachment import (
    ALL_OPERATIONS,
    Norm,
    NormSet,
    Operator,
    basis1,
    basis2,
    basis3,
    basis4,
    basis_for,
    directly_triggered,
    materialize,
    triggering_rounds,
    weak_output,
    weakly_triggered_sets,
)
from iolsat.formula import TOP, And, Atom, Not, Or
from iolsat.logic import entails, equivalent, is_consistent

a, b, x, y, z = (Atom(n) for n in "abxyz")
h, t = Atom("h"), Atom("t")

EXAMPLE = NormSet([Norm("n1", a, x), Norm("n2", b, y), Norm("n3", And(x, y), z)])


def test_normset_basics():
    assert len(EXAMPLE) == 3
    assert EXAMPLE.names == ("n1", "n2", "n3")
    assert EXAMPLE["n2"].head == y
    assert EXAMPLE.restrict(["n3", "n1"]).names == ("n1", "n3")
    assert EXAMPLE.without(["n1"]).names == ("n2", "n3")
    assert EXAMPLE.restrict(["n1", "n2"]) == NormSet([EXAMPLE["n1"], EXAMPLE["n2"]])
    with pytest.raises(ValueError):
        NormSet([Norm("n", a, x), Norm("n", b, y)])


def test_example_out1_out3():
    assert directly_triggered([a, b], EXAMPLE).names == ("n1", "n2")
    assert equivalent(basis1(EXAMPLE, [a, b]), [x, y])
    assert equivalent(basis3(EXAMPLE, [a, b]), [x, y, z])
    assert basis1(EXAMPLE, [Or(a, b)]) == ()
    assert basis3(EXAMPLE, [Or(a, b)]) == ()


def test_example_out2_out4():
    assert equivalent(basis2(EXAMPLE, [Or(a, b)]), [Or(x, y)])
    out4 = basis4(EXAMPLE, [Or(a, b)])
    assert entails(out4, Or(x, y))
    assert not entails(out4, z)


def test_weakly_triggered_fixture():
    n = NormSet([Norm("n1", a, x), Norm("n2", b, y)])
    found = weakly_triggered_sets([a, Or(a, b)], n)
    assert [s.names for s in found] == [("n1",), ("n1", "n2")]


def test_weakly_triggered_inconsistent_input():
    found = weakly_triggered_sets([a, Not(a)], EXAMPLE)
    assert sorted(s.names for s in found) == [("n1",), ("n2",), ("n3",)]


def test_weak_output_dedupes():
    assert weak_output([Norm("p", a, x), Norm("q", b, x)]) == x
    assert weak_output([Norm("p", a, x), Norm("q", b, y)]) == Or(x, y)


def test_materialize():
    assert materialize(EXAMPLE) == (Or(Not(a), x), Or(Not(b), y), Or(Not(And(x, y)), z))


def test_chisholm_out3_inconsistent():
    norms = NormSet([Norm("n1", TOP, h), Norm("n2", h, t), Norm("n3", Not(h), Not(t))])
    assert not is_consistent(basis3(norms, [Not(h)]))


def test_throughput_includes_input():
    for op in Operator:
        base = basis_for(op, EXAMPLE, [a, b], throughput=True)
        assert entails(base, And(a, b))
        assert entails(base, x)
    assert entails(basis_for(Operator.OUT3, EXAMPLE, [a, b], True), z)
    assert entails(basis_for(Operator.OUT4, EXAMPLE, [Or(a, b)], True), Or(x, y))


def test_all_operations():
    assert len(ALL_OPERATIONS) == 7
    assert (Operator.OUT4, True) not in ALL_OPERATIONS


def test_chain_converges_in_k_rounds():
    k = 6
    p = [Atom(f"p{i}") for i in range(k + 1)]
    chain = NormSet(Norm(f"c{i}", p[i], p[i + 1]) for i in range(k))
    rounds = list(triggering_rounds(chain, [p[0]]))
    assert len(rounds) == k
    assert all(len(r) == 1 for r in rounds)
    assert entails(basis3(chain, [p[0]]), p[k])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_basis_inclusions(seed):
    _, norms, inputs = random_instance(random.Random(seed))
    b1, b3 = basis1(norms, inputs), basis3(norms, inputs)
    b2, b4 = basis2(norms, inputs), basis4(norms, inputs)
    assert all(entails(b3, f) for f in b1)
    assert all(entails(b2, f) for f in b1)
    assert all(entails(b4, f) for f in b2)
    assert all(entails(b4, f) for f in b3)
    assert basis4(norms, inputs) == basis2(norms, [*inputs, *materialize(norms)])
