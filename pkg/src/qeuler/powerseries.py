"""Truncated formal power series with exact rational coefficients.

Used for every exponential generating function in the package. A series of
order K stores c_0..c_K; products and reciprocals keep the smaller order.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from .qcalc import DomainError, as_fraction

__all__ = [
    "TruncatedSeries",
    "classical_genocchi_coeffs",
    "classical_genocchi_order_coeffs",
    "classical_w_euler_coeffs",
    "cos_generating_coeffs",
    "egf_values",
    "ps_add",
    "ps_exp_linear",
    "ps_mul",
    "ps_recip",
    "ps_scale",
    "ps_shift",
]


class TruncatedSeries:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [as_fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise DomainError("truncation order must be >= 0")
        cs = cs[: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.order = order

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedSeries":
        return cls([c], order)

    def __getitem__(self, k: int) -> Fraction:
        if k > self.order:
            raise IndexError(f"coefficient t^{k} is beyond truncation order {self.order}")
        return self.coeffs[k]

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        return f"TruncatedSeries([{', '.join(map(str, self.coeffs))}], order={self.order})"

    def __add__(self, other):
        return ps_add(self, other)

    def __sub__(self, other):
        return ps_add(self, ps_scale(other, -1))

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return ps_mul(self, other)
        return ps_scale(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return ps_recip(self) ** (-k)
        out = TruncatedSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out


def ps_exp_linear(c, K: int) -> TruncatedSeries:
    """e^{c t} = sum_k c^k t^k / k! up to t^K."""
    c = as_fraction(c)
    out = []
    term = Fraction(1)
    for k in range(K + 1):
        out.append(term)
        term = term * c / (k + 1)
    return TruncatedSeries(out, K)


def ps_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    K = min(a.order, b.order)
    return TruncatedSeries((a.coeffs[k] + b.coeffs[k] for k in range(K + 1)), K)


def ps_scale(a: TruncatedSeries, c) -> TruncatedSeries:
    c = as_fraction(c)
    return TruncatedSeries((x * c for x in a.coeffs), a.order)


def ps_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    K = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(K + 1):
        s = Fraction(0)
        for i in range(k + 1):
            if ac[i] and bc[k - i]:
                s += ac[i] * bc[k - i]
        out.append(s)
    return TruncatedSeries(out, K)


def ps_recip(a: TruncatedSeries) -> TruncatedSeries:
    """1/a; needs a nonzero constant term."""
    c0 = a.coeffs[0]
    if c0 == 0:
        raise DomainError("reciprocal of a series with zero constant term")
    out = [1 / c0]
    for k in range(1, a.order + 1):
        s = sum((a.coeffs[i] * out[k - i] for i in range(1, k + 1)), Fraction(0))
        out.append(-s / c0)
    return TruncatedSeries(out, a.order)


def ps_shift(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """Multiply by t^k, keeping the same truncation order."""
    return TruncatedSeries([0] * k + list(a.coeffs), a.order)


def egf_values(s: TruncatedSeries) -> list[Fraction]:
    """n! * [t^n] s for n = 0..order."""
    return [c * math.factorial(n) for n, c in enumerate(s.coeffs)]


def _twisted_euler_factor(w: Fraction, K: int) -> TruncatedSeries:
    """2 / (w e^t + 1)."""
    if w == -1:
        raise DomainError("w = -1 is a pole of 2/(w e^t + 1)")
    return ps_recip(ps_exp_linear(1, K) * w + TruncatedSeries.constant(1, K)) * 2


def classical_w_euler_coeffs(r: int, w, x, K: int) -> list[Fraction]:
    """E^{(r)}_{n,w}(x) for n = 0..K from (2/(w e^t + 1))^r e^{xt}."""
    if r < 1:
        raise DomainError("order r must be >= 1")
    w, x = as_fraction(w), as_fraction(x)
    series = _twisted_euler_factor(w, K) ** r * ps_exp_linear(x, K)
    return egf_values(series)


def classical_genocchi_coeffs(w, K: int) -> list[Fraction]:
    """G_{n,w} for n = 0..K from 2t/(w e^t + 1)."""
    return classical_genocchi_order_coeffs(1, as_fraction(w), 0, K)


def classical_genocchi_order_coeffs(r: int, w, x, K: int) -> list[Fraction]:
    """G^{(r)}_{n,w}(x) for n = 0..K from (2t/(w e^t + 1))^r e^{xt}.

    The r-th power is applied to the whole factor ``2t/(w e^t + 1)``.
    """
    if r < 1:
        raise DomainError("order r must be >= 1")
    w, x = as_fraction(w), as_fraction(x)
    series = ps_shift(_twisted_euler_factor(w, K) ** r, r) * ps_exp_linear(x, K)
    return egf_values(series)


def cos_generating_coeffs(h: int, r: int, q, K: int) -> list[Fraction]:
    """G^{(h,r)}_{n,q} for n = 0..K from 2^r t^r / prod_{i=1}^r (q^{h-i+1} e^t + 1)."""
    if r < 1:
        raise DomainError("order r must be >= 1")
    q = as_fraction(q)
    et = ps_exp_linear(1, K)
    one = TruncatedSeries.constant(1, K)
    den = one
    for i in range(1, r + 1):
        e = h - i + 1
        if q == 0 and e < 0:
            raise DomainError(f"factor i={i}: q^{e} undefined at q = 0")
        c = q**e
        if c == -1:
            raise DomainError(f"factor i={i}: q^{e} e^t + 1 has zero constant term")
        den = den * (et * c + one)
    series = ps_shift(ps_recip(den) * 2**r, r)
    return egf_values(series)
