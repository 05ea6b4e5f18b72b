"""Exact q-calculus primitives over the rationals.

Scalars are :class:`fractions.Fraction`. Gaussian binomials are built as
integer polynomials in ``q`` first and evaluated afterwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

from .kernels import int_convolve

RationalLike = Union[int, Fraction]

__all__ = [
    "ArgSpec",
    "DomainError",
    "QPolynomial",
    "as_fraction",
    "gauss_binomial_eval",
    "gauss_binomial_poly",
    "is_odd_prime",
    "negbinom_series_coeff",
    "padic_valuation",
    "q_bracket",
    "q_bracket_frac",
    "q_minus_bracket",
    "q_shift_factorial",
]


class DomainError(ValueError):
    """An argument lies outside the domain where a formula is defined."""


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/7"`` to a Fraction.

    Floats are refused: nothing in this package is allowed to round.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def is_odd_prime(p: int) -> bool:
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        return False
    return all(p % k for k in range(3, math.isqrt(p) + 1, 2))


def padic_valuation(x: RationalLike, p: int) -> Union[int, float]:
    """Return v_p(x); ``math.inf`` for zero."""
    if not is_odd_prime(p):
        raise DomainError(f"p must be an odd prime, got {p!r}")
    x = as_fraction(x)
    if x == 0:
        return math.inf
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def q_bracket(m: int, q: RationalLike) -> Fraction:
    """The q-number [m]_q = (1 - q^m)/(1 - q), with [m]_1 = m."""
    q = as_fraction(q)
    if q == 1:
        return Fraction(m)
    if q == 0 and m < 0:
        raise DomainError("[m]_q with q = 0 needs m >= 0")
    return (1 - q**m) / (1 - q)


def q_minus_bracket(m: int, q: RationalLike) -> Fraction:
    """[m]_{-q} = (1 - (-q)^m)/(1 + q)."""
    q = as_fraction(q)
    if q == -1:
        raise DomainError("[m]_{-q} is undefined at q = -1")
    if q == 0 and m < 0:
        raise DomainError("[m]_{-q} with q = 0 needs m >= 0")
    return (1 - (-q) ** m) / (1 + q)


def q_shift_factorial(a: RationalLike, q: RationalLike, k: int) -> Fraction:
    """(a:q)_k = (1 - a)(1 - a q)...(1 - a q^{k-1})."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    a = as_fraction(a)
    q = as_fraction(q)
    out = Fraction(1)
    step = a
    for _ in range(k):
        out *= 1 - step
        step *= q
    return out


@dataclass(frozen=True)
class ArgSpec:
    """A polynomial argument ``x = s/d`` together with a d-th root ``u`` of q.

    ``q = u**d``, so ``q**(l*x) == u**(l*s)`` is exact for every integer l.
    """

    s: int
    d: int
    u: Fraction

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise DomainError(f"ArgSpec.d must be a positive integer, got {self.d!r}")
        object.__setattr__(self, "u", as_fraction(self.u))
        if self.u == 0:
            raise DomainError("ArgSpec.u must be nonzero")

    @classmethod
    def integer(cls, x: int, q: RationalLike) -> "ArgSpec":
        return cls(x, 1, as_fraction(q))

    @property
    def q(self) -> Fraction:
        return self.u**self.d

    @property
    def x(self) -> Fraction:
        return Fraction(self.s, self.d)

    def q_power(self, l: int) -> Fraction:
        """q^{l x}."""
        return self.u ** (l * self.s)


def q_bracket_frac(arg: ArgSpec, offset: int) -> Fraction:
    """[offset + s/d]_q with q = u^d, as (1 - u^{d*offset + s})/(1 - u^d)."""
    q = arg.q
    if q == 1:
        return offset + arg.x
    return (1 - arg.u ** (arg.d * offset + arg.s)) / (1 - q)


class QPolynomial:
    """Dense polynomial in q with integer coefficients.

    ``coeffs[i]`` is the coefficient of ``q**i``. Trailing zeros are trimmed;
    the zero polynomial has ``degree == -1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "QPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def bracket(cls, m: int) -> "QPolynomial":
        """[m]_q = 1 + q + ... + q^{m-1} for m >= 0."""
        if m < 0:
            raise DomainError("polynomial [m]_q needs m >= 0")
        return cls([1] * m)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPolynomial([other])
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)

    def __add__(self, other):
        if isinstance(other, int):
            other = QPolynomial([other])
        if not isinstance(other, QPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return QPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return QPolynomial(int_convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def exact_div(self, other: "QPolynomial") -> "QPolynomial":
        """Quotient of an exact division; raises if there is a remainder.

        Works over the integers only when the divisor's leading coefficient
        divides everything it needs to, which holds for monic divisors.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dd = other.degree
        quot = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            qc, r = divmod(c, lead)
            if r:
                raise ArithmeticError("non-integral quotient coefficient")
            quot[i - dd] = qc
            for j, oc in enumerate(other.coeffs):
                rem[i - dd + j] -= qc * oc
        if any(rem):
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return QPolynomial(quot)

    def __call__(self, q: RationalLike) -> Fraction:
        q = as_fraction(q)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc


def gauss_binomial_poly(n: int, k: int) -> QPolynomial:
    """Gaussian binomial C(n, k)_q as a polynomial in q.

    Built from [n]_q [n-1]_q ... [n-k+1]_q / [k]_q! by exact polynomial
    division. Returns the zero polynomial for k > n.
    """
    if n < 0 or k < 0:
        raise DomainError("gauss_binomial_poly needs n, k >= 0")
    if k > n:
        return QPolynomial()
    k = min(k, n - k)
    num = QPolynomial([1])
    den = QPolynomial([1])
    for i in range(k):
        num = num * QPolynomial.bracket(n - i)
        den = den * QPolynomial.bracket(i + 1)
    out = num.exact_div(den)
    assert out.degree == k * (n - k)
    return out


def gauss_binomial_eval(n: int, k: int, q: RationalLike) -> Fraction:
    return gauss_binomial_poly(n, k)(q)


def negbinom_series_coeff(alpha: int, m: int, q: RationalLike) -> Fraction:
    """m-th coefficient of 1/(z:q)_alpha, i.e. C(m + alpha - 1, m)_q."""
    if alpha < 1 or m < 0:
        raise DomainError("negbinom_series_coeff needs alpha >= 1, m >= 0")
    return gauss_binomial_eval(m + alpha - 1, m, q)

