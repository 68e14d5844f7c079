"""Closed-form counts for the avoidance classes.

Everything here is exact integer arithmetic; intermediate rationals are
allowed but any non-integral final value raises ArithmeticError, since
each formula is supposed to count something.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


def _exact_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} is non-integral: {value}")
    return value.numerator


def catalan_k(n: int, k: int = 3) -> int:
    """Generalized Catalan number binom(k n, n) / ((k - 1) n + 1).

    At k = 3 this counts the matchings on [2n] avoiding 12312.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if k < 2:
        raise ValueError("k must be at least 2")
    return _exact_int(
        Fraction(comb(k * n, n), (k - 1) * n + 1), f"catalan_k({n}, {k})")


def catalan(n: int) -> int:
    return catalan_k(n, 2)


def crossing_refined_12312(n: int, m: int) -> int:
    """Number of 12312-avoiding matchings on [2n] with exactly m crossings.

    Alternating sum over i = n .. 2n - 1 of
    (-1)^(n + m + i) / i * binom(i, n) binom(3n, i + 1 + n) binom(i - n, m).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if m < 0:
        return 0
    if n == 0:
        return 1 if m == 0 else 0
    total = Fraction(0)
    for i in range(n, 2 * n):
        sign = -1 if (n + m + i) % 2 else 1
        total += Fraction(
            sign * comb(i, n) * comb(3 * n, i + 1 + n) * comb(i - n, m), i)
    return _exact_int(total, f"crossing_refined_12312({n}, {m})")


def crossing_refined_expansion(n: int, m: int) -> int:
    """Same count, derived by expanding the crossing polynomial of size n
    in powers of (y - 1) and reading off y^m.

    The coefficient of (y - 1)^e is
    binom(n + e, n) binom(3n, n - e - 1) / (n + e) for e < n; the
    polynomial sum is then multiplied out exactly.  Kept separate from
    crossing_refined_12312 so the two routes audit each other.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if m < 0:
        return 0
    if n == 0:
        return 1 if m == 0 else 0
    # poly[k] accumulates the y^k coefficient
    poly = [Fraction(0)] * (n + 1)
    base = [Fraction(0)] * (n + 1)
    base[0] = Fraction(1)  # (y - 1)^0
    for e in range(n):
        c = Fraction(
            comb(n + e, n) * comb(3 * n, n - e - 1), n + e)
        for k, b in enumerate(base):
            poly[k] += c * b
        nxt = [Fraction(0)] * (n + 1)
        for k in range(len(base) - 1, -1, -1):
            if base[k]:
                if k + 1 <= n:
                    nxt[k + 1] += base[k]
                nxt[k] -= base[k]
        base = nxt
    if m > n:
        return 0
    return _exact_int(poly[m], f"crossing_refined_expansion({n}, {m})")


def double_avoider_count(n: int) -> int:
    """Number of matchings on [2n] avoiding both 12312 and 121323.

    1/n * sum over j = 1..n of 2^(j-1) binom(n, j) binom(n, j - 1), with
    the empty matching counted once at n = 0.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 1
    total = Fraction(0)
    for j in range(1, n + 1):
        total += Fraction(2 ** (j - 1) * comb(n, j) * comb(n, j - 1), n)
    return _exact_int(total, f"double_avoider_count({n})")


def narayana(n: int, k: int) -> int:
    """Narayana number 1/n binom(n, k) binom(n, k + 1)."""
    if n < 1:
        raise ValueError("n must be positive")
    if k < 0:
        return 0
    return _exact_int(
        Fraction(comb(n, k) * comb(n, k + 1), n), f"narayana({n}, {k})")


def crossing_refined_double(n: int, m: int) -> int:
    """Number of matchings on [2n] avoiding 12312 and 121323 with exactly
    m crossings: 1/n binom(n, m) binom(2n - m, n + 1)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if m < 0:
        return 0
    if n == 0:
        return 1 if m == 0 else 0
    return _exact_int(
        Fraction(comb(n, m) * comb(2 * n - m, n + 1), n),
        f"crossing_refined_double({n}, {m})")


def catalan_identity_holds(n: int) -> bool:
    """Does the crossing refinement collapse to Catalan at zero crossings?

    Checks crossing_refined_12312(n, 0) == catalan(n).
    """
    return crossing_refined_12312(n, 0) == catalan(n)
