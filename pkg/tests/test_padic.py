from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import given, settings, strategies as st

from padicpairs import DomainError, PadicApprox, is_nth_power, lambda_rep, padic_log, vp
from padicpairs.padic import multiplicative_order

PRIMES = st.sampled_from([2, 3, 5, 7])
nonzero_int = st.integers(-10**6, 10**6).filter(bool)
nonzero_q = st.builds(Fraction, nonzero_int, st.integers(1, 10**6))


def slow_vp(q, p):
    q = Fraction(q)
    num, den, v = abs(q.numerator), q.denominator, 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def series_log(x, p, N):
    """Reference log: sum enough terms of the series with exact fractions."""
    u = Fraction(x) - 1
    total = Fraction(0)
    for i in range(1, 4 * N + 20):
        total += (-1) ** (i + 1) * u**i / i
    mod = p**N
    return total.numerator * pow(total.denominator, -1, mod) % mod


class TestVp:
    def test_examples(self):
        assert vp(75, 5) == 2
        assert vp(Fraction(-5, 11), 5) == 1
        assert vp(63, 3) == slow_vp(63, 3) == 2

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            vp(0, 5)

    @given(nonzero_q, nonzero_q, PRIMES)
    def test_laws(self, q, r, p):
        assert vp(q * r, p) == vp(q, p) + vp(r, p)
        if q + r:
            assert vp(q + r, p) >= min(vp(q, p), vp(r, p))
            if vp(q, p) != vp(r, p):
                assert vp(q + r, p) == min(vp(q, p), vp(r, p))

    @given(nonzero_q, PRIMES)
    def test_matches_slow(self, q, p):
        assert vp(q, p) == slow_vp(q, p)


class TestLog:
    def test_example(self):
        assert padic_log(6, 5, 3).residue == 55
        assert series_log(6, 5, 3) == 55

    @pytest.mark.parametrize("N", [1, 5, 40])
    def test_identity(self, N):
        assert padic_log(1, 5, N).possibly_zero

    @pytest.mark.parametrize("N", range(2, 30))
    def test_valuation_of_log_six(self, N):
        assert padic_log(6, 5, N).valuation == 1

    def test_domain(self):
        with pytest.raises(DomainError):
            padic_log(2, 5, 4)
        with pytest.raises(DomainError):
            padic_log(3, 2, 4)
        with pytest.raises(DomainError):
            padic_log(6, 5, 10, max_precision=8)

    @settings(max_examples=60)
    @given(st.sampled_from([3, 5, 7]), st.integers(-300, 300), st.integers(1, 12))
    def test_against_series(self, p, t, N):
        x = 1 + p * t
        if x == 0:
            return
        assert padic_log(x, p, N).residue == series_log(x, p, N)

    @given(st.sampled_from([(2, 4), (3, 3), (5, 5), (7, 7)]), st.integers(-500, 500),
           st.integers(-500, 500), st.integers(1, 40))
    def test_multiplicative(self, pm, s, t, N):
        p, m = pm
        x, y = 1 + m * s, 1 + m * t
        if x == 0 or y == 0:
            return
        lhs = padic_log(x * y, p, N)
        assert lhs.congruent(padic_log(x, p, N) + padic_log(y, p, N))


class TestApprox:
    def test_from_rational(self):
        a = PadicApprox.from_rational(Fraction(50, 3), 5, 6)
        assert a.valuation == 2 and a.precision == 6
        assert a.residue == 50 * pow(3, -1, 5**6) % 5**6

    @given(st.integers(-10**5, 10**5), st.integers(-10**5, 10**5), st.integers(2, 12))
    def test_ring_ops_match_integers(self, a, b, N):
        p = 3
        mod = p**N
        A, B = PadicApprox.from_rational(a, p, N), PadicApprox.from_rational(b, p, N)
        assert (A + B).residue == (a + b) % mod
        assert (A - B).residue == (a - b) % mod
        assert (A * B).residue % p ** (A * B).precision == (a * b) % p ** (A * B).precision

    def test_invariant(self):
        with pytest.raises(DomainError):
            PadicApprox(5, 10, 0, 4)


@lru_cache(maxsize=None)
def power_residues(p, n, K=8):
    mod = p**K
    return frozenset(pow(y, n, mod) for y in range(mod) if y % p)


class TestNthPower:
    def test_examples(self):
        assert is_nth_power(6, 2, 5)
        assert not is_nth_power(2, 2, 5)
        assert is_nth_power(25, 2, 5)

    @settings(max_examples=40)
    @given(nonzero_q, st.integers(2, 6), PRIMES)
    def test_powers_are_powers(self, x, n, p):
        assert is_nth_power(x**n, n, p)

    @pytest.mark.parametrize("p", [2, 3, 5])
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_against_residue_search(self, p, n):
        table = power_residues(p, n)
        for x in range(-200, 201):
            if x == 0:
                continue
            v = slow_vp(x, p)
            u = x // p**v
            expected = v % n == 0 and u % p**8 in table
            assert is_nth_power(x, n, p) == expected, (x, n, p)

    def test_errors(self):
        with pytest.raises(DomainError):
            is_nth_power(0, 2, 5)
        with pytest.raises(DomainError):
            is_nth_power(3, 1, 5)


class TestLambda:
    def test_examples(self):
        assert lambda_rep(50, 5) == 25
        assert lambda_rep(Fraction(3, 4), 2) == Fraction(1, 4)
        assert lambda_rep(1, 3) == 1

    @given(nonzero_q, nonzero_q, PRIMES)
    def test_multiplicative(self, x, y, p):
        assert lambda_rep(x * y, p) == lambda_rep(x, p) * lambda_rep(y, p)


def test_multiplicative_order():
    assert multiplicative_order(6, 5, 3) == 25
    assert pow(6, 25, 125) == 1 and pow(6, 5, 125) != 1
    assert multiplicative_order(2, 5, 2) == 20
