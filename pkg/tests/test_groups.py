import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from padicpairs import INF, DomainError, GroupElement, StandardModel
from padicpairs.groups import succ

exps = st.integers(-60, 60)
elements = st.builds(GroupElement, exps, exps)


def oracle_V(model, g):
    """V straight from the exact rational, by repeated division."""
    if g.is_identity:
        return INF
    q = model.realize(g) - 1
    num, v = abs(q.numerator), 0
    while num % model.p == 0:
        num //= model.p
        v += 1
    return v - model.k


class TestBigV:
    def test_examples(self, model5):
        assert model5.big_V(GroupElement(1, 0)) == 0
        assert model5.big_V(GroupElement(0, 0)) == INF
        assert model5.big_V(GroupElement(5, 0)) == 1
        assert 6**5 - 1 == 7775 == 25 * 311

    @settings(max_examples=150)
    @given(elements)
    def test_matches_rational_oracle(self, dense_model, g):
        assert dense_model.big_V(g) == oracle_V(dense_model, g)

    @settings(max_examples=100)
    @given(elements)
    def test_dual_path(self, dense_model, g):
        assert dense_model.big_V(g, "exact") == dense_model.big_V(g, "log")

    @settings(max_examples=150)
    @given(elements, elements, st.integers(-40, 40).filter(bool))
    def test_valued_group_laws(self, dense_model, g, h, n):
        V = dense_model.big_V
        assert (V(g) == INF) == g.is_identity
        assert V(n * g) == succ(V(g), dense_model.vp(n))
        assert V(g + h) >= min(V(g), V(h))
        if V(g) != V(h):
            assert V(g + h) == min(V(g), V(h))

    def test_unknown_method(self, model5):
        with pytest.raises(ValueError):
            model5.big_V(GroupElement(1, 1), "guess")

    @pytest.mark.parametrize("N", range(0, 11))
    def test_every_value_attained(self, dense_model, N):
        p = dense_model.p
        g = GroupElement(p**N, 0)
        assert max(abs(g.m), abs(g.n)) <= p**N
        assert dense_model.big_V(g) == N

    def test_small_values_found_by_search(self, model5):
        box = range(-30, 31)
        seen = {model5.big_V(GroupElement(m, n)) for m in box for n in box}
        assert set(range(3)) <= seen


class TestCong:
    def test_examples(self):
        cong = StandardModel.cong
        assert cong(GroupElement(3, 2), GroupElement(1, 0), 2)
        assert not cong(GroupElement(1, 0), GroupElement(0, 1), 2)
        g = GroupElement(7, -4)
        assert all(cong(g, g, n) for n in range(1, 10))

    def test_bad_modulus(self):
        with pytest.raises(DomainError):
            StandardModel.cong(GroupElement(1, 0), GroupElement(1, 0), 0)

    @pytest.mark.parametrize("n,sub,size", [(2, "G", 4), (3, "H", 3), (4, "G", 16)])
    def test_quotient_reps(self, n, sub, size):
        reps = StandardModel.quotient_reps(n, sub)
        assert len(reps) == size
        for a, b in itertools.combinations(reps, 2):
            assert not StandardModel.cong(a, b, n)


class TestResidueUnit:
    def test_example(self, model5):
        assert model5.residue_unit(GroupElement(1, 0), GroupElement(0, 1)) == 3
        # oracle: 6 * 11^-i = 1 mod 25 picks i = 3
        assert [i for i in range(1, 5) if 6 * pow(11, -i, 25) % 25 == 1] == [3]

    @given(elements.filter(lambda g: not g.is_identity))
    def test_self(self, model5, g):
        assert model5.residue_unit(g, g) == 1

    @settings(max_examples=80)
    @given(elements, elements)
    def test_unique(self, dense_model, x, y):
        V = dense_model.big_V
        if V(x) != V(y) or V(x) == INF:
            return
        good = [i for i in range(1, dense_model.p) if V(x - i * y) > V(x)]
        assert good == [dense_model.residue_unit(x, y)]

    def test_unequal_values(self, model5):
        with pytest.raises(DomainError):
            model5.residue_unit(GroupElement(1, 0), GroupElement(5, 0))


def test_realize(model5):
    assert model5.realize(GroupElement(-1, 2)) == Fraction(121, 6)


def test_element_arithmetic():
    g, h = GroupElement(3, -1), GroupElement(-2, 5)
    assert g + h == GroupElement(1, 4)
    assert g - g == GroupElement(0, 0)
    assert 3 * g == GroupElement(9, -3)
    assert str(-g) == "g(-3,1)"
    assert GroupElement(4, 0).in_h and not h.in_h
