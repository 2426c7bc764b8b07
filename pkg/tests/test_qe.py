import itertools
import math
import random

import pytest

from formula_gen import qf
from oracles import brute_nonempty, random_ball_sets, random_system, tree_dist
from padicpairs import Config, DomainError, GroupElement, StandardModel, UnsupportedFragmentError
from padicpairs.formula import normalize_dnf, parse
from padicpairs.formula.ast import negate
from padicpairs.qe import (
    BallSystem,
    ball_consistency,
    candidates,
    check_sat,
    combine_congruences,
    decide,
    decide_exists,
    eliminate,
    eliminate_exists,
    eval_ground,
    find_witness,
    ultrametric_nonempty,
    witness_search,
)

A, B, ONE = GroupElement(1, 0), GroupElement(0, 1), GroupElement(0, 0)


def model_of(*cfg):
    return StandardModel(Config(*cfg))


# ----------------------------------------------------------------- ground


class TestEvalGround:
    def test_examples(self, model5):
        assert eval_ground(parse("V(x) >= 1"), {"x": GroupElement(5, 0)}, model5)
        assert eval_ground(parse("H(x)"), {"x": GroupElement(3, 0)}, model5)
        assert eval_ground(parse("x cong 2 a"), {"x": GroupElement(3, 2)}, model5)
        assert not eval_ground(parse("V(x) >= 2"), {"x": GroupElement(5, 0)}, model5)

    def test_quantified_rejected(self, model5):
        with pytest.raises(DomainError):
            eval_ground(parse("exists x in G. true"), {}, model5)


# ----------------------------------------------------------------- congruences


class TestCombine:
    def test_examples(self):
        assert combine_congruences([(2, A), (3, A)]) == (6, A)
        assert combine_congruences([(2, A), (2, B)]) is None
        assert combine_congruences([]) == (1, ONE)

    @pytest.mark.parametrize("seed", range(40))
    def test_against_search(self, seed):
        rng = random.Random(seed)
        congs = [
            (rng.choice([2, 3, 4, 6, 9]), GroupElement(rng.randint(-5, 5), rng.randint(-5, 5)))
            for _ in range(rng.randint(1, 3))
        ]
        lcm = math.lcm(*(n for n, _ in congs))
        sols = [
            GroupElement(m, n)
            for m in range(lcm)
            for n in range(lcm)
            if all(StandardModel.cong(GroupElement(m, n), a, k) for k, a in congs)
        ]
        got = combine_congruences(congs)
        if not sols:
            assert got is None
        else:
            N, c = got
            assert N == lcm
            assert sols == [c2 for c2 in sols if StandardModel.cong(c2, c, N)]
            assert len(sols) == 1


# ----------------------------------------------------------------- balls


def test_ultrametric_examples():
    d = tree_dist(5)
    assert not ultrametric_nonempty([(0, 3), (5, 3)], [], 5, d)
    assert ultrametric_nonempty([(0, 2)], [(0, 5)], 5, d)
    assert ultrametric_nonempty([], [], 5, d)
    # V(x - a) = 2 and V(x - b) = 2 with V(a - b) = 5
    assert ultrametric_nonempty([(0, 2), (3125, 2)], [(0, 3), (3125, 3)], 5, d)


def test_ultrametric_vs_enumeration():
    agree = 0
    for p, D, pos, neg in random_ball_sets(600):
        expect = brute_nonempty(pos, neg, p, D)
        assert ultrametric_nonempty(pos, neg, p, tree_dist(p)) == expect, (p, pos, neg)
        agree += 1
    assert agree >= 500


# ----------------------------------------------------------------- deciding


EXAMPLE_SENTENCES = [
    ("exists x in G. V(x) = 0", True),
    ("exists x in G. V(x) >= 1 and V(x) < 1", False),
    ("exists x in G. x cong 2 a and V(x - a) >= 9", True),
    ("exists x in G. H(x) and V(x - b) >= 4", True),
    ("exists x in G. x = a and x = b", False),
    ("forall x in G. V(x) >= 0", True),
    ("forall x in H. exists y in G. 2*y = x", False),
    ("forall x in G. exists y in G. V(2*y - x) >= 7", True),
    ("exists x in H. not H(x)", False),
    ("forall x in G. x = g(0,0) or V(x) < inf", True),
]


@pytest.mark.parametrize("text,expected", EXAMPLE_SENTENCES)
def test_decide_examples(model5, text, expected):
    assert decide(parse(text), model5) is expected
    assert decide(negate(parse(text)), model5) is (not expected)


def test_doubling_at_two():
    model = model_of(2, 5, 13)
    assert decide(parse("forall x in G. V(x + x) = V(x) + 1"), model)
    assert not decide(parse("forall x in G. V(x + x) = V(x)"), model)


def test_not_a_sentence(model5):
    with pytest.raises(DomainError):
        decide(parse("V(x) = 0"), model5)


def test_eliminate_outputs(model5):
    assert str(eliminate_exists("x", parse("V(x - y) >= 3 and x cong 5 g(0,0)"), model5)) == "V(y) >= 1"
    assert str(eliminate(parse("exists x in G. 2*x = y"), model5)) == "y cong 2 g(0,0)"


def test_eliminate_equivalent_pointwise(model5):
    rng = random.Random(5)
    for _ in range(25):
        body = parse(qf(rng, 2))
        qfree = eliminate_exists("x", body, model5)
        for _ in range(6):
            y = GroupElement(rng.randint(-20, 20), rng.randint(-4, 4))
            found = find_witness(body, "x", model5, 12, {"y": y})
            if found is not None:
                assert eval_ground(qfree, {"y": y}, model5), (str(body), y)


@pytest.mark.parametrize("cfg", [(5, 6, 11), (3, 4, 7), (2, 5, 13)])
def test_negation_and_quantifier_order(cfg):
    model = model_of(*cfg)
    rng = random.Random(cfg[0])
    for _ in range(25):
        body = qf(rng, 2, ("x", "y"), ())
        s1 = parse(f"exists x in G. exists y in G. {body}")
        s2 = parse(f"exists y in G. exists x in G. {body}")
        r = decide(s1, model)
        assert decide(s2, model) == r
        assert decide(negate(s1), model) == (not r)
        f1 = parse(f"forall x in G. exists y in H. {body}")
        assert decide(negate(f1), model) == (not decide(f1, model))


# ----------------------------------------------------------------- soundness


@pytest.mark.parametrize("cfg", [(5, 6, 11), (3, 4, 7)])
def test_decider_vs_witness_search(cfg):
    model = model_of(*cfg)
    rng = random.Random(100 + cfg[0])
    sat_with_witness = unsat = 0
    for _ in range(110):
        body = random_system(rng, model)
        sat = decide_exists(body, "x", model)
        w = find_witness(body, "x", model, 20)
        if w is not None:
            assert sat, str(body)
            assert eval_ground(body, {"x": w}, model)
            sat_with_witness += 1
        if not sat:
            assert w is None
            unsat += 1
    assert sat_with_witness > 20 and unsat > 10


def test_ball_systems_vs_witness_search(model5):
    rng = random.Random(3)
    checked = 0
    for _ in range(120):
        for c in normalize_dnf(random_system(rng, model5), "x", 5):
            if c.free:
                continue
            sys = BallSystem.from_conjunct(c, model5)
            if sys is None:
                assert witness_search_formula(c, model5) is None
                continue
            ok = ball_consistency(sys, model5)
            w = witness_search(sys, 20, model5)
            if w is not None:
                assert ok and sys.holds_at(w, model5)
                assert eval_ground(c.formula(), {"x": w}, model5)
            if not ok:
                assert w is None
            checked += 1
    assert checked >= 100


def witness_search_formula(c, model):
    return find_witness(c.formula(), "x", model, 20)


# ----------------------------------------------------------------- witnesses


def test_witness_search_example(model5):
    body = parse("x cong 2 a and V(x - a) >= 2")
    (c,) = normalize_dnf(body, "x", 5)
    sys = BallSystem.from_conjunct(c, model5)
    w = witness_search(sys, 200, model5)
    assert w is not None and w.m % 2 == 1 and w.n % 2 == 0
    q = model5.realize(GroupElement(w.m - 1, w.n)) - 1
    assert q.numerator % 125 == 0


def test_witness_search_trivial(model5):
    (c,) = normalize_dnf(parse("V(x - a) >= 0"), "x", 5)
    assert witness_search(BallSystem.from_conjunct(c, model5), 5, model5) == A
    (c,) = normalize_dnf(parse("V(x) >= 1 and V(x) < 1"), "x", 5)
    sys = BallSystem.from_conjunct(c, model5)
    assert not ball_consistency(sys, model5)
    assert witness_search(sys, 10, model5) is None


def test_ball_system_flags(model5):
    (c,) = normalize_dnf(parse("H(x - a) and x cong 3 b and V(x - b) >= 2"), "x", 5)
    sys = BallSystem.from_conjunct(c, model5)
    assert sys.h_flag == "in-H" and sys.coset == (3, B)
    # H(x - a) pins the beta exponent to 0, which is not 1 mod 3
    assert not ball_consistency(sys, model5)
    assert witness_search(sys, 40, model5) is None
    (c,) = normalize_dnf(parse("H(x - a) and x cong 3 a and V(x - a) >= 2"), "x", 5)
    sys = BallSystem.from_conjunct(c, model5)
    assert ball_consistency(sys, model5) and witness_search(sys, 40, model5) == A


def test_ball_system_excluded_coset(model5):
    (c,) = normalize_dnf(parse("not x cong 2 a and H(x)"), "x", 5)
    sys = BallSystem.from_conjunct(c, model5)
    assert sys.coset_out == ((2, A),)
    assert ball_consistency(sys, model5)
    w = witness_search(sys, 5, model5)
    assert w.n == 0 and w.m % 2 == 0
    (c,) = normalize_dnf(parse("not x cong 1 a"), "x", 5)
    assert not ball_consistency(BallSystem.from_conjunct(c, model5), model5)


def test_candidates_order():
    first = list(itertools.islice(candidates(3), 5))
    assert first == [ONE, GroupElement(-1, 0), GroupElement(0, -1), GroupElement(0, 1), A]
    assert len(list(candidates(3))) == 49


def test_check_sat(model5):
    sat, w = check_sat(parse("V(x) = 0"), "x", model5, 20)
    assert sat and model5.big_V(w) == 0
    assert check_sat(parse("V(x) = 1 and V(x) = 2"), "x", model5, 20) == (False, None)


def test_find_witness_errors(model5):
    with pytest.raises(DomainError):
        find_witness(parse("V(x - y) = 0"), "x", model5, 3)
    with pytest.raises(UnsupportedFragmentError):
        find_witness(parse("exists y in G. x = y"), "x", model5, 3)
