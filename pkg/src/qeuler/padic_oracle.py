"""Brute-force fermionic p-adic integrals.

The fermionic integral of f over Z_p is the p-adic limit of the alternating
sums ``sum_{x < p^N} f(x) (-1)^x``. The Witt checks below evaluate those
sums (r-fold, every lattice point visited) and record how fast they approach
the engine's exact values, measured by p-adic valuation.

At each finite level the translation identity holds with an explicit
boundary term, since p^N is odd::

    S_N(f(. + 1)) = -S_N(f) + 2 f(0) + (f(p^N) - f(0))
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Union

from . import engine, kernels, powerseries
from .qcalc import (
    ArgSpec,
    DomainError,
    as_fraction,
    is_odd_prime,
    padic_valuation,
    q_bracket,
    q_minus_bracket,
)

Valuation = Union[int, float]

# largest lattice p^{N r} a Witt check will enumerate
MAX_LATTICE = 10**7

__all__ = [
    "MAX_LATTICE",
    "PadicDomain",
    "WittReport",
    "cos_witt_check",
    "fermionic_partial_sum",
    "fermionic_q_partial_sum",
    "translation_boundary_term",
    "witt_check_hq",
    "witt_check_plain",
    "witt_partial_sum",
]


@dataclass(frozen=True)
class PadicDomain:
    """An odd prime with q and w both congruent to 1 mod p."""

    p: int
    q: Fraction
    w: Fraction = Fraction(1)

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise DomainError(f"p must be an odd prime, got {self.p!r}")
        object.__setattr__(self, "q", as_fraction(self.q))
        object.__setattr__(self, "w", as_fraction(self.w))
        for name in ("q", "w"):
            v = padic_valuation(getattr(self, name) - 1, self.p)
            if v < 1:
                raise DomainError(f"need |1 - {name}|_p < 1, got v_p({name} - 1) = {v}")


@dataclass(frozen=True)
class WittReport:
    p: int
    exact: Fraction
    entries: list = field(default_factory=list)  # (N, partial, valuation)

    @property
    def valuations(self) -> list[Valuation]:
        return [v for _, _, v in self.entries]

    @property
    def passes(self) -> bool:
        """Valuations nondecreasing in N and the last one >= N_max - 1."""
        vs = self.valuations
        if not vs:
            return False
        monotone = all(a <= b for a, b in zip(vs, vs[1:]))
        return monotone and vs[-1] >= self.entries[-1][0] - 1


def fermionic_partial_sum(f: Callable[[int], Fraction], p: int, N: int) -> Fraction:
    """sum_{x < p^N} f(x) (-1)^x."""
    if N < 1:
        raise DomainError("level N must be >= 1")
    total = Fraction(0)
    for x in range(p**N):
        total += -f(x) if x & 1 else f(x)
    return total


def fermionic_q_partial_sum(f: Callable[[int], Fraction], p: int, N: int, q) -> Fraction:
    """sum_{x < p^N} f(x) (-q)^x / [p^N]_{-q}."""
    if N < 1:
        raise DomainError("level N must be >= 1")
    q = as_fraction(q)
    P = p**N
    norm = q_minus_bracket(P, q)
    if norm == 0:
        raise DomainError(f"normalizer [p^N]_(-q) vanishes for q={q}")
    total = Fraction(0)
    wt = Fraction(1)
    for x in range(P):
        total += f(x) * wt
        wt *= -q
    return total / norm


def translation_boundary_term(f: Callable[[int], Fraction], p: int, N: int) -> Fraction:
    """f(p^N) - f(0), the level-N defect of I(f(.+1)) = -I(f) + 2 f(0)."""
    return as_fraction(f(p**N)) - as_fraction(f(0))


def _common_denominator(values) -> tuple[list[int], int]:
    den = 1
    for v in values:
        den = math.lcm(den, v.denominator)
    return [v.numerator * (den // v.denominator) for v in values], den


def witt_partial_sum(
    p: int,
    N: int,
    r: int,
    integrand: Callable[[int], Fraction],
    q: Fraction = Fraction(1),
    weights: tuple[int, ...] | None = None,
) -> Fraction:
    """sum over (x_1..x_r) in [0, p^N)^r of
    g(x_1+...+x_r) * q^{sum c_i x_i} * (-1)^{x_1+...+x_r}.

    ``integrand`` is g as a function of the coordinate sum and ``weights``
    the c_i (all zero when omitted).
    """
    P = p**N
    if P**r > MAX_LATTICE:
        raise DomainError(f"lattice p^(N r) = {P**r} exceeds the cap {MAX_LATTICE}")
    weights = tuple(weights) if weights is not None else (0,) * r
    if len(weights) != r:
        raise DomainError("need one weight per coordinate")
    smax = r * (P - 1)
    g = [(-1 if s & 1 else 1) * as_fraction(integrand(s)) for s in range(smax + 1)]
    emin = sum(min(c, 0) for c in weights) * (P - 1)
    emax = sum(max(c, 0) for c in weights) * (P - 1)
    if q == 0 and emin < 0:
        raise DomainError("negative powers of q = 0")
    b = [q**e for e in range(emin, emax + 1)]
    a_num, a_den = _common_denominator(g)
    b_num, b_den = _common_denominator(b)
    total = kernels.lattice_sum(a_num, b_num, list(weights), emin, P)
    return Fraction(total, a_den * b_den)


def _report(p: int, exact: Fraction, partial_at: Callable[[int], Fraction], n_max: int) -> WittReport:
    entries = []
    for N in range(1, n_max + 1):
        s = partial_at(N)
        entries.append((N, s, padic_valuation(s - exact, p)))
    return WittReport(p, exact, entries)


def _bracket_integrand(n: int, x: int, q: Fraction, w: Fraction):
    return lambda s: w**s * q_bracket(x + s, q) ** n


def witt_check_plain(n: int, r: int, w, x: int, dom: PadicDomain, n_max: int) -> WittReport:
    """Partial sums of the r-fold integral of w^{|x|} [x + |x|]_q^n against E^{(r)}_{n,w,q}(x)."""
    w = as_fraction(w)
    _in_domain(dom, w)
    exact = engine.euler_q_poly(n, r, w, ArgSpec.integer(x, dom.q))
    g = _bracket_integrand(n, x, dom.q, w)
    return _report(dom.p, exact, lambda N: witt_partial_sum(dom.p, N, r, g), n_max)


def _hq_weights(h: int, r: int) -> tuple[int, ...]:
    return tuple(h - i + 1 for i in range(1, r + 1))


def witt_check_hq(n: int, r: int, h: int, w, x: int, dom: PadicDomain, n_max: int) -> WittReport:
    """As :func:`witt_check_plain` with the extra weight q^{sum_{i=1}^r (h-i+1) x_i}."""
    w = as_fraction(w)
    _in_domain(dom, w)
    exact = engine.euler_hq_poly(n, r, h, w, ArgSpec.integer(x, dom.q))
    g = _bracket_integrand(n, x, dom.q, w)
    wts = _hq_weights(h, r)
    return _report(
        dom.p, exact, lambda N: witt_partial_sum(dom.p, N, r, g, dom.q, wts), n_max
    )


def cos_witt_check(n: int, r: int, h: int, dom: PadicDomain, n_max: int) -> WittReport:
    """Integral of q^{sum (h-i+1) x_i} (x_1+...+x_r)^n against the Eq.-(2)-type number.

    The exact side is G^{(h,r)}_{n+r,q} / (r! C(n+r, r)) read off the
    generating function 2^r t^r / prod (q^{h-i+1} e^t + 1).
    """
    G = powerseries.cos_generating_coeffs(h, r, dom.q, n + r)[n + r]
    exact = G / (math.factorial(r) * math.comb(n + r, r))
    wts = _hq_weights(h, r)
    g = lambda s: Fraction(s) ** n
    return _report(
        dom.p, exact, lambda N: witt_partial_sum(dom.p, N, r, g, dom.q, wts), n_max
    )


def _in_domain(dom: PadicDomain, w: Fraction) -> None:
    if padic_valuation(w - 1, dom.p) < 1:
        raise DomainError(f"w = {w} is outside the p-adic domain for p = {dom.p}")
