"""Exact truncated power series for the counting identities.

Coefficients are ints or Fractions, never floats: every identity here is
exact, and a float would silently turn an identity check into an
approximation.  Univariate series track one truncation order; bivariate
series (x marks size, y marks crossings) truncate in x only, since each
x-degree carries finitely many y terms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Number = Union[int, Fraction]


def _as_exact(value: object) -> Number:
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise TypeError(f"exact coefficient required, got {value!r}")
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


class UnivariateSeries:
    """A power series truncated after x^order, with exact coefficients."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Number], order: int | None = None):
        coeffs = tuple(_as_exact(c) for c in coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(coeffs) < order + 1:
            coeffs = coeffs + (0,) * (order + 1 - len(coeffs))
        self.coeffs = coeffs[:order + 1]
        self.order = order

    @classmethod
    def constant(cls, value: Number, order: int) -> "UnivariateSeries":
        return cls((value,), order)

    @classmethod
    def x(cls, order: int) -> "UnivariateSeries":
        return cls((0, 1), order)

    def coeff(self, n: int) -> Number:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation {self.order}")
        return self.coeffs[n]

    def int_coeffs(self) -> tuple[int, ...]:
        out = []
        for n, c in enumerate(self.coeffs):
            if isinstance(c, Fraction):
                raise ArithmeticError(
                    f"coefficient of x^{n} is non-integral: {c}")
            out.append(c)
        return tuple(out)

    def _common_order(self, other: "UnivariateSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "UnivariateSeries") -> "UnivariateSeries":
        k = self._common_order(other)
        return UnivariateSeries(
            (a + b for a, b in zip(self.coeffs, other.coeffs)), k)

    def __sub__(self, other: "UnivariateSeries") -> "UnivariateSeries":
        k = self._common_order(other)
        return UnivariateSeries(
            (a - b for a, b in zip(self.coeffs, other.coeffs)), k)

    def __mul__(self, other: "UnivariateSeries") -> "UnivariateSeries":
        k = self._common_order(other)
        out = [0] * (k + 1)
        for i, a in enumerate(self.coeffs[:k + 1]):
            if a == 0:
                continue
            for j in range(k + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return UnivariateSeries(out, k)

    def scale(self, value: Number) -> "UnivariateSeries":
        value = _as_exact(value)
        return UnivariateSeries((value * c for c in self.coeffs), self.order)

    def shift(self, k: int) -> "UnivariateSeries":
        """Multiply by x^k."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        return UnivariateSeries((0,) * k + self.coeffs, self.order)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def inverse(self) -> "UnivariateSeries":
        if self.coeffs[0] != 1:
            raise ValueError("inverse requires constant term 1")
        inv = [1] + [0] * self.order
        for n in range(1, self.order + 1):
            acc = 0
            for i in range(1, n + 1):
                acc += self.coeffs[i] * inv[n - i] if i < len(self.coeffs) else 0
            inv[n] = -acc
        return UnivariateSeries(inv, self.order)

    def sqrt(self) -> "UnivariateSeries":
        """Square root with constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("sqrt requires constant term 1")
        root: list[Number] = [1] + [0] * self.order
        for n in range(1, self.order + 1):
            acc = self.coeffs[n]
            for i in range(1, n):
                acc -= root[i] * root[n - i]
            root[n] = _as_exact(Fraction(acc, 2))
        return UnivariateSeries(root, self.order)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, UnivariateSeries)
                and self.order == other.order
                and self.coeffs == other.coeffs)

    def __repr__(self) -> str:
        return f"UnivariateSeries({self.coeffs!r})"


class BivariateSeries:
    """A series in x and y, truncated after x^order.

    Stored sparsely as (x degree, y degree) -> coefficient.  The y degree
    is never truncated; the identities here only produce finitely many y
    terms per x degree.
    """

    __slots__ = ("terms", "order")

    def __init__(self, terms: dict[tuple[int, int], Number], order: int):
        if order < 0:
            raise ValueError("order must be non-negative")
        self.order = order
        self.terms = {
            (n, m): _as_exact(c)
            for (n, m), c in terms.items()
            if n <= order and c != 0
        }

    @classmethod
    def constant(cls, value: Number, order: int) -> "BivariateSeries":
        return cls({(0, 0): value}, order)

    def coeff(self, n: int, m: int) -> Number:
        if n > self.order:
            raise IndexError(f"coefficient x^{n} beyond truncation {self.order}")
        return self.terms.get((n, m), 0)

    def int_coeff(self, n: int, m: int) -> int:
        c = self.coeff(n, m)
        if isinstance(c, Fraction):
            raise ArithmeticError(
                f"coefficient of x^{n} y^{m} is non-integral: {c}")
        return c

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        order = min(self.order, other.order)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return BivariateSeries(terms, order)

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        order = min(self.order, other.order)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) - c
        return BivariateSeries(terms, order)

    def __mul__(self, other: "BivariateSeries") -> "BivariateSeries":
        order = min(self.order, other.order)
        terms: dict[tuple[int, int], Number] = {}
        for (n1, m1), a in self.terms.items():
            if n1 > order:
                continue
            for (n2, m2), b in other.terms.items():
                n = n1 + n2
                if n > order:
                    continue
                key = (n, m1 + m2)
                terms[key] = terms.get(key, 0) + a * b
        return BivariateSeries(terms, order)

    def mul_x(self) -> "BivariateSeries":
        return BivariateSeries(
            {(n + 1, m): c for (n, m), c in self.terms.items()}, self.order)

    def mul_y(self) -> "BivariateSeries":
        return BivariateSeries(
            {(n, m + 1): c for (n, m), c in self.terms.items()}, self.order)

    def is_zero(self) -> bool:
        return not self.terms

    def inverse(self) -> "BivariateSeries":
        """Inverse of a series whose constant term is 1 and whose remainder
        has positive x degree throughout."""
        if self.terms.get((0, 0)) != 1:
            raise ValueError("inverse requires constant term 1")
        rest = BivariateSeries(
            {key: c for key, c in self.terms.items() if key != (0, 0)},
            self.order)
        if any(n == 0 for (n, m) in rest.terms):
            raise ValueError("inverse requires the remainder to carry x")
        one = BivariateSeries.constant(1, self.order)
        inv = one
        for _ in range(self.order):
            inv = one + (one - self) * inv
        return inv

    def x_slice(self, n: int) -> dict[int, Number]:
        """All y coefficients at x^n, as {y degree: coefficient}."""
        if n > self.order:
            raise IndexError(f"x^{n} beyond truncation {self.order}")
        return {m: c for (n2, m), c in self.terms.items() if n2 == n}

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, BivariateSeries)
                and self.order == other.order
                and self.terms == other.terms)

    def __repr__(self) -> str:
        return f"BivariateSeries({self.terms!r}, order={self.order})"


def crossing_series(order: int) -> BivariateSeries:
    """Joint generating function of 12312-avoiding matchings by size (x)
    and crossing number (y).

    Solved as the fixed point of G = 1 + (x G^3 + y (G - 1)^2) / G, which
    gains one x order per pass; the defining equation
    x G^3 + G - G^2 + y (G - 1)^2 = 0 is re-checked on the result.
    """
    one = BivariateSeries.constant(1, order)
    g = one
    for _ in range(order + 1):
        gm1 = g - one
        num = (g * g * g).mul_x() + (gm1 * gm1).mul_y()
        g = one + num * g.inverse()
    residual = (g * g * g).mul_x() + g - g * g + ((g - one) * (g - one)).mul_y()
    if not residual.is_zero():
        raise ArithmeticError("crossing series does not satisfy its equation")
    return g


def block_series(order: int) -> BivariateSeries:
    """Companion series B defined by G = 1 + B G, so B = (G - 1) / G.

    It satisfies B (1 - y B) = x G, equivalently (G - 1)(1 - y B) = x G^2,
    and both identities are re-checked on the computed truncation.
    """
    g = crossing_series(order)
    one = BivariateSeries.constant(1, order)
    b = (g - one) * g.inverse()
    if not (b * (one - b.mul_y()) - g.mul_x()).is_zero():
        raise ArithmeticError("block series fails its defining equation")
    if not ((g - one) * (one - b.mul_y()) - (g * g).mul_x()).is_zero():
        raise ArithmeticError("block series fails the product form")
    return b


def double_avoider_series(order: int) -> UnivariateSeries:
    """Generating function of matchings avoiding 12312 and 121323.

    Fixed point of F = 1 + x F^2 / (1 - x F).
    """
    one = UnivariateSeries.constant(1, order)
    f = one
    for _ in range(order + 1):
        xf = (f * f).shift(1)
        f = one + xf * (one - f.shift(1)).inverse()
    residual = one - f + (f * f).shift(1) * (one - f.shift(1)).inverse()
    if not residual.is_zero():
        raise ArithmeticError("series does not satisfy its equation")
    return f


def double_avoider_series_sqrt(order: int) -> UnivariateSeries:
    """Same series through the closed form (1 + x - sqrt(1 - 6x + x^2)) / (4x)."""
    pad = order + 1
    radicand = UnivariateSeries((1, -6, 1), pad)
    root = radicand.sqrt()
    top = UnivariateSeries((1, 1), pad) - root
    if top.coeffs[0] != 0:
        raise ArithmeticError("numerator lost its factor of x")
    dropped = UnivariateSeries(top.coeffs[1:], order)
    quarter = Fraction(1, 4)
    return UnivariateSeries((quarter * c for c in dropped.coeffs), order)
