"""Exact arithmetic helpers: p-adic valuations and the two counting
functions that appear in the divisibility bounds.

Only integers and ``fractions.Fraction`` values ever enter these
functions; there is no floating point anywhere in the package.
"""

from fractions import Fraction
from math import isqrt


class _Infinity:
    """The valuation of zero: an absorbing maximum under + and comparisons."""

    __slots__ = ()

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is INFINITY

    def __gt__(self, other):
        return other is not INFINITY

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__
    __sub__ = __add__

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()

#: A p-adic valuation: an integer, or INFINITY for the zero element.
Valuation = int | _Infinity


def is_prime(p: int) -> bool:
    """Deterministic primality by trial division (desk-scale inputs only)."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def vp(q: Fraction | int, p: int) -> Valuation:
    """The p-adic valuation of a rational number.

    vp(q, p) is the exponent of p in q, negative when p divides the
    denominator, and INFINITY for q = 0.  Raises ValueError if p is not
    prime.
    """
    if not is_prime(p):
        raise ValueError(f"valuations need a prime, got p={p}")
    q = Fraction(q)
    if q == 0:
        return INFINITY
    num = q.numerator
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    if v:
        return v
    den = q.denominator
    while den % p == 0:
        den //= p
        v -= 1
    return v


def bin_ones(n: int) -> int:
    """Number of ones in the binary expansion of n >= 0."""
    if n < 0:
        raise ValueError(f"binary digit count needs n >= 0, got {n}")
    return n.bit_count()


def tri_count(n: int) -> int:
    """The largest m with m*(m+1)/2 <= n, for n >= 1.

    This is the number of triangular numbers in 1..n, the quantity
    subtracted from n in every divisibility bound below.
    """
    if n < 1:
        raise ValueError(f"tri_count needs n >= 1, got {n}")
    return (isqrt(8 * n + 1) - 1) // 2


def v2_factorial(m: int) -> int:
    """The 2-adic valuation of m!, by Legendre's formula m - bin_ones(m)."""
    if m < 0:
        raise ValueError(f"factorials need m >= 0, got {m}")
    return m - bin_ones(m)
