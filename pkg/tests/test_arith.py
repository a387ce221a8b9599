from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chessfock.arith import (INFINITY, bin_ones, is_prime, tri_count,
                             v2_factorial, vp)


def brute_v2(n):
    """Oracle: count factors of 2 by direct division."""
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    return v


def test_vp_examples():
    assert vp(12, 2) == 2
    assert vp(Fraction(3, 8), 2) == -3
    assert vp(0, 2) is INFINITY
    assert vp(Fraction(9, 5), 3) == 2
    assert vp(7, 5) == 0


@pytest.mark.parametrize("bad", [1, 0, -2, 4, 9, 15])
def test_vp_rejects_nonprime(bad):
    with pytest.raises(ValueError):
        vp(6, bad)


def test_infinity_is_absorbing():
    assert INFINITY + 5 is INFINITY
    assert 5 + INFINITY is INFINITY
    assert INFINITY - 3 is INFINITY
    assert 5 < INFINITY
    assert not (INFINITY < 5)
    assert INFINITY >= 10 ** 9
    assert min(3, INFINITY) == 3
    assert min(INFINITY, 3) == 3
    assert INFINITY == INFINITY
    assert INFINITY != 5


def test_bin_ones():
    assert bin_ones(0) == 0
    assert bin_ones(7) == 3
    assert bin_ones(12) == 2
    assert bin_ones(2 ** 20) == 1
    with pytest.raises(ValueError):
        bin_ones(-1)


def test_tri_count_examples():
    assert tri_count(1) == 1
    assert tri_count(10) == 4
    assert tri_count(11) == 4
    with pytest.raises(ValueError):
        tri_count(0)


def test_tri_count_staircase():
    # nondecreasing, and exact on the triangular numbers themselves
    prev = 0
    for n in range(1, 5051):
        cur = tri_count(n)
        assert cur >= prev
        prev = cur
    for m in range(1, 101):
        assert tri_count(m * (m + 1) // 2) == m
        if m > 1:
            assert tri_count(m * (m + 1) // 2 - 1) == m - 1


def test_v2_factorial_small_against_brute_force():
    # frozen: v2(10!) = 8, recomputed here by dividing out the 2s
    assert brute_v2(factorial(10)) == 8
    assert v2_factorial(10) == 8
    assert v2_factorial(0) == 0
    assert v2_factorial(1) == 0
    assert v2_factorial(4) == 3
    for m in (2, 6, 10, 31, 32, 100, 255, 256):
        assert v2_factorial(m) == brute_v2(factorial(m))


def test_v2_factorial_matches_running_valuation_to_2000():
    # oracle: v2(m!) = sum of v2(k) for k <= m, accumulated directly
    running = 0
    for m in range(1, 2001):
        running += brute_v2(m)
        assert v2_factorial(m) == running
        assert v2_factorial(m) <= m - 1


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}
    for n in range(31):
        assert is_prime(n) == (n in primes)


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=40)


@given(rationals, rationals, st.sampled_from([2, 3, 5]))
def test_vp_axioms(q, r, p):
    if q and r:
        assert vp(q * r, p) == vp(q, p) + vp(r, p)
    assert vp(q + r, p) >= min(vp(q, p), vp(r, p))
