"""Exact combinatorial sums shared by the geometry and trend modules.

Each quantity that admits more than one closed form is evaluated through all
of them and the results are asserted equal, so a regression in any one
formula fails loudly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

MAX_SUM_INDEX = 64


def _check_index(n: int, low: int = 1) -> None:
    if not low <= n <= MAX_SUM_INDEX:
        raise ValueError(f"argument must be in [{low}, {MAX_SUM_INDEX}], got {n}")


@lru_cache(maxsize=None)
def harmonic_number(n: int) -> Fraction:
    """Sum of 1/j for j = 1..n."""
    _check_index(n)
    total = Fraction(0)
    for j in range(1, n + 1):
        total += Fraction(1, j)
    return total


@lru_cache(maxsize=None)
def binomial_harmonic_sum(n: int) -> Fraction:
    """Sum of C(n, a)/a over a = 1..n.

    Evaluated both as the direct binomial sum and as
    sum(2^j / j) - sum(1 / j); the two must agree exactly.
    """
    _check_index(n)
    direct = Fraction(0)
    for a in range(1, n + 1):
        direct += Fraction(comb(n, a), a)
    powers = Fraction(0)
    for j in range(1, n + 1):
        powers += Fraction(1 << j, j)
    assert direct == powers - harmonic_number(n)
    return direct


@lru_cache(maxsize=None)
def axis_norm_sq(n: int) -> Fraction:
    """Squared norm of the equal-division-minus-Shapley direction.

    Equals sum over a of C(n, a) * (1/a - 1/n), and also
    binomial_harmonic_sum(n) - (2^n - 1)/n; both are computed and compared.
    """
    _check_index(n, low=2)
    via_sum = Fraction(0)
    for a in range(1, n + 1):
        via_sum += comb(n, a) * (Fraction(1, a) - Fraction(1, n))
    via_h = binomial_harmonic_sum(n) - Fraction((1 << n) - 1, n)
    assert via_sum == via_h
    return via_sum


@lru_cache(maxsize=None)
def power_harmonic_sum(n: int) -> Fraction:
    """Sum of 2^j / j for j = 1..n-1.

    For n >= 2 the exact identity
    axis_norm_sq(n) = power_harmonic_sum(n) + 1/n - harmonic_number(n)
    is asserted on every call.
    """
    _check_index(n)
    total = Fraction(0)
    for j in range(1, n):
        total += Fraction(1 << j, j)
    if n >= 2:
        assert axis_norm_sq(n) == total + Fraction(1, n) - harmonic_number(n)
    return total


@lru_cache(maxsize=None)
def solidarity_stratum_epsilon(a: int, n: int) -> Fraction:
    """Per-size mixing coefficient of the solidarity value toward equal division.

    Three equivalent finite sums are evaluated and asserted equal, plus the
    clean special cases at a = 1, a = n-1, and a = n-2.
    """
    if not 1 <= a <= n - 1:
        raise ValueError(f"size must satisfy 1 <= a <= n-1, got a={a}, n={n}")
    _check_index(n, low=2)

    direct = Fraction(0)
    for s in range(a + 1, n + 1):
        direct += Fraction(comb(n - a - 1, s - a - 1), s * comb(n - 1, s - 1))
    direct *= a

    ratio = Fraction(a, comb(n - 1, a))
    binom = Fraction(0)
    for s in range(a + 1, n + 1):
        binom += Fraction(comb(s - 1, a), s)
    binom *= ratio

    tail = Fraction(0)
    for s in range(a + 1, n):
        tail += Fraction(comb(s, a + 1), s * (s + 1))
    abel = Fraction(a, a + 1) + ratio * tail

    assert direct == binom == abel
    if a == 1:
        assert direct == 1 - Fraction(harmonic_number(n) - 1, n - 1)
    if a == n - 1:
        assert direct == Fraction(n - 1, n)
    if a == n - 2:
        assert direct == Fraction((n - 2) * ((n - 1) ** 2 + n), n * (n - 1) ** 2)
    return direct
