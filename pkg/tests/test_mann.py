import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from padicpairs import BudgetError, DomainError
from padicpairs.mann import is_nondegenerate, mann_axiom, mann_enumerate

ORACLE = json.loads((Path(__file__).parent / "fixtures" / "mann_oracle.json").read_text())


def as_tuples(sols):
    return sorted(tuple(tuple(e) for e in sol) for sol in sols)


@pytest.mark.parametrize("case", ORACLE["cases"], ids=lambda c: f"{c['coeffs']}_B{c['bound']}")
def test_matches_brute_force_fixture(case):
    inst = mann_enumerate(case["coeffs"], case["bound"], tuple(ORACLE["generators"]))
    assert as_tuples(inst.solutions) == as_tuples(case["solutions"])


def test_one_minus_one_values():
    inst = mann_enumerate((1, -1), 10)
    expected = {(2, 1), (3, 2), (4, 3), (9, 8), ("3/2", "1/2"), ("4/3", "1/3"), ("9/8", "1/8")}
    expected = {tuple(Fraction(v) for v in pair) for pair in expected}
    assert {inst.values(s) for s in inst.solutions} == expected


def test_one_plus_one_contains_halves():
    inst = mann_enumerate((1, 1), 5)
    values = {inst.values(s) for s in inst.solutions}
    assert (Fraction(1, 2), Fraction(1, 2)) in values
    assert (Fraction(2, 3), Fraction(1, 3)) in values


def test_single_coefficient():
    assert mann_enumerate((1,), 0).solutions == (((0, 0),),)
    inst = mann_enumerate((2,), 3)
    assert [inst.values(s) for s in inst.solutions] == [(Fraction(1, 2),)]


@pytest.mark.parametrize("coeffs,bound", [((1, -1), 6), ((1, 1), 4), ((2, -3), 4), ((1, 1, -1), 1)])
def test_solutions_reverify(coeffs, bound):
    inst = mann_enumerate(coeffs, bound)
    for sol in inst.solutions:
        vals = inst.values(sol)
        assert sum(Fraction(c) * v for c, v in zip(coeffs, vals)) == 1
        assert is_nondegenerate(coeffs, vals)
        assert all(abs(e) <= bound for vec in sol for e in vec)


@pytest.mark.parametrize("coeffs", [(1, -1), (1, 1), (3, -2)])
def test_bound_monotone(coeffs):
    chain = [set(mann_enumerate(coeffs, b).solutions) for b in range(0, 7)]
    assert all(a <= b for a, b in zip(chain, chain[1:]))


@settings(max_examples=15, deadline=None)
@given(st.lists(st.integers(-4, 4).filter(bool), min_size=2, max_size=2))
def test_permutation_symmetry(coeffs):
    fwd = mann_enumerate(coeffs, 3).solutions
    rev = mann_enumerate(coeffs[::-1], 3).solutions
    assert {s[::-1] for s in fwd} == set(rev)


def test_degenerate_filtered():
    assert not is_nondegenerate((1, -1, 1), (1, 1, 1))
    assert is_nondegenerate((1, 1), (Fraction(1, 2), Fraction(1, 2)))


def test_axiom_text():
    inst = mann_enumerate((1, -1), 10)
    text = mann_axiom(inst)
    caveat, body = text.split("\n")
    assert "bounded by 10" in caveat
    assert body.count(" and y2 = ") == 7
    empty = mann_enumerate((1, 1), 0)
    assert empty.solutions == ()
    assert mann_axiom(empty).endswith("-> (false)")


def test_errors():
    with pytest.raises(BudgetError):
        mann_enumerate((1, 1, 1, 1), 10)
    with pytest.raises(DomainError):
        mann_enumerate((1, 0), 2)
    with pytest.raises(DomainError):
        mann_enumerate((1, -1), 2, generators=(2, 4))
    with pytest.raises(DomainError):
        mann_enumerate((), 2)
