"""Univariate rational functions over Q, and Abel-regularized alternating sums.

A divergent sum ``sum_v c_v v^n`` whose generating function
``R(z) = sum_v c_v z^v`` is rational is assigned the value ``(theta^n R)(1)``
with ``theta = z d/dz``. That equals ``d^n/dt^n R(e^t)`` at ``t = 0``, which
is what makes it agree with exponential generating functions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .qcalc import DomainError, as_fraction

Poly = tuple  # tuple[Fraction, ...], index = exponent of z

__all__ = [
    "RationalFunction",
    "euler_theta",
    "regularized_alt_qbinom_sum",
    "rf_arith",
]


# -- polynomial helpers over Q ---------------------------------------------

def _trim(cs: Iterable) -> Poly:
    cs = [as_fraction(c) for c in cs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _add(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def _scale(a: Poly, c: Fraction) -> Poly:
    return _trim(x * c for x in a)


def _mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    quot = [Fraction(0)] * max(len(a) - db, 0)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        qc = c / lead
        quot[i - db] = qc
        for j, y in enumerate(b):
            rem[i - db + j] -= qc * y
    return _trim(quot), _trim(rem[:db])


def _monic(a: Poly) -> Poly:
    return _scale(a, 1 / a[-1]) if a else a


def _gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, _divmod(a, b)[1]
    return _monic(a)


def _deriv(a: Poly) -> Poly:
    return _trim(i * c for i, c in enumerate(a))[1:] if len(a) > 1 else ()


def _eval(a: Poly, z: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * z + c
    return acc


class RationalFunction:
    """Reduced quotient ``num/den`` of polynomials in z over Q.

    The denominator is monic and coprime to the numerator, so equal
    functions have identical representations. The zero function is ``0/1``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Sequence = (), den: Sequence = (1,)):
        num, den = _trim(num), _trim(den)
        if not den:
            raise DomainError("rational function with zero denominator")
        if not num:
            den = (Fraction(1),)
        else:
            g = _gcd(num, den)
            if len(g) > 1:
                num = _divmod(num, g)[0]
                den = _divmod(den, g)[0]
            lead = den[-1]
            num, den = _scale(num, 1 / lead), _scale(den, 1 / lead)
        self.num: Poly = num
        self.den: Poly = den

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        return cls((as_fraction(c),))

    @classmethod
    def z(cls) -> "RationalFunction":
        return cls((0, 1))

    @classmethod
    def coerce(cls, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        return cls.constant(other)

    def is_zero(self) -> bool:
        return not self.num

    def __eq__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({[str(c) for c in self.num]}, {[str(c) for c in self.den]})"

    def __add__(self, other):
        other = RationalFunction.coerce(other)
        return RationalFunction(
            _add(_mul(self.num, other.den), _mul(other.num, self.den)),
            _mul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(_scale(self.num, Fraction(-1)), self.den)

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        other = RationalFunction.coerce(other)
        return RationalFunction(_mul(self.num, other.num), _mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFunction.coerce(other)
        if other.is_zero():
            raise DomainError("division by the zero rational function")
        return RationalFunction(_mul(self.num, other.den), _mul(self.den, other.num))

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __pow__(self, k: int) -> "RationalFunction":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (RationalFunction.constant(1) / self) ** (-k)
        out = RationalFunction.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            _add(_mul(_deriv(self.num), self.den), _scale(_mul(self.num, _deriv(self.den)), Fraction(-1))),
            _mul(self.den, self.den),
        )

    def __call__(self, z) -> Fraction:
        z = as_fraction(z)
        d = _eval(self.den, z)
        if d == 0:
            raise DomainError(f"pole at z = {z}")
        return _eval(self.num, z) / d


def rf_arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    """Apply one of ``+ - * /`` (``×``, ``÷``, ``−`` accepted too)."""
    if op in ("+",):
        return a + b
    if op in ("-", "−"):
        return a - b
    if op in ("*", "×"):
        return a * b
    if op in ("/", "÷"):
        return a / b
    raise ValueError(f"unknown operator {op!r}")


def euler_theta(R: RationalFunction) -> RationalFunction:
    """z * R'(z)."""
    return RationalFunction.z() * R.derivative()


def alt_qbinom_generating_function(r: int, q, w) -> RationalFunction:
    """1 / prod_{i<r} (1 + z w q^i), the generating function of C(v+r-1, v)_q (-w)^v."""
    q, w = as_fraction(q), as_fraction(w)
    den: Poly = (Fraction(1),)
    for i in range(r):
        den = _mul(den, _trim((1, w * q**i)))
    return RationalFunction((1,), den)


def regularized_alt_qbinom_sum(n: int, r: int, q, w) -> Fraction:
    """Abel value of ``sum_{v>=0} C(r+v-1, v)_q (-w)^v v^n``.

    Computed exactly as ``(theta^n R)(1)`` for
    ``R(z) = 1/prod_{i<r}(1 + z w q^i)``.
    """
    if n < 0 or r < 1:
        raise DomainError("regularized_alt_qbinom_sum needs n >= 0, r >= 1")
    q, w = as_fraction(q), as_fraction(w)
    for i in range(r):
        if 1 + w * q**i == 0:
            raise DomainError(f"pole at z = 1: factor 1 + z*w*q^{i} vanishes (w={w}, q={q})")
    R = alt_qbinom_generating_function(r, q, w)
    for _ in range(n):
        R = euler_theta(R)
    return R(1)
