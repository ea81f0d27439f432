"""Random formula and instance generators shared by the test modules."""

from __future__ import annotations

import random
from pathlib import Path

from hypothesis import strategies as st

from iolsat.detachment import Norm, NormSet
from iolsat.formula import BOTTOM, TOP, And, Atom, Iff, Implies, Not, Or

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"

ATOM_NAMES = ("a", "b", "c", "d")
CONNECTIVES = (And, Or, Implies, Iff)


def random_formula(rng: random.Random, names, depth: int):
    if depth == 0 or rng.random() < 0.35:
        r = rng.random()
        if r < 0.05:
            return TOP
        if r < 0.1:
            return BOTTOM
        return Atom(rng.choice(names))
    if rng.random() < 0.25:
        return Not(random_formula(rng, names, depth - 1))
    op = rng.choice(CONNECTIVES)
    return op(random_formula(rng, names, depth - 1), random_formula(rng, names, depth - 1))


def random_instance(rng: random.Random, max_norms: int = 3, max_atoms: int = 4, depth: int = 2):
    names = ATOM_NAMES[: rng.randint(2, max_atoms)]
    norms = NormSet(
        Norm(f"n{i}", random_formula(rng, names, depth), random_formula(rng, names, depth))
        for i in range(rng.randint(0, max_norms))
    )
    inputs = tuple(random_formula(rng, names, depth) for _ in range(rng.randint(0, 2)))
    return names, norms, inputs


def candidate_pool(rng: random.Random, names, norms, size: int = 12):
    """Formulas to probe an output set with: atoms, literals, head combinations."""
    pool = [TOP, BOTTOM]
    pool += [Atom(n) for n in names] + [Not(Atom(n)) for n in names]
    heads = [n.head for n in norms]
    pool += heads
    for i, h in enumerate(heads):
        for g in heads[i + 1 :]:
            pool += [Or(h, g), And(h, g)]
    pool = list(dict.fromkeys(pool))
    while len(pool) < size:
        phi = random_formula(rng, names, 2)
        if phi not in pool:
            pool.append(phi)
    return pool


def formulas(names=ATOM_NAMES, max_leaves: int = 8):
    """Hypothesis strategy for formulas over ``names``."""
    leaves = st.sampled_from([Atom(n) for n in names] + [TOP, BOTTOM])

    def extend(children):
        return st.one_of(
            children.map(Not),
            st.tuples(st.sampled_from(CONNECTIVES), children, children).map(
                lambda t: t[0](t[1], t[2])
            ),
        )

    return st.recursive(leaves, extend, max_leaves=max_leaves)
