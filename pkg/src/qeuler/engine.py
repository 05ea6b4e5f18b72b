"""q- and (h,q)-extensions of w-Euler and w-Genocchi numbers of order r.

Every family has an exact closed form (a finite sum over l = 0..n) and a
truncated infinite series in m. The two are computed independently.

Notation used throughout: ``n`` index, ``r`` order, ``w`` twist, ``h``
weight exponent, ``x`` an :class:`ArgSpec` carrying both the argument and
``q = x.u ** x.d``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Optional

from .qcalc import (
    ArgSpec,
    DomainError,
    as_fraction,
    gauss_binomial_eval,
    q_bracket,
    q_bracket_frac,
    q_shift_factorial,
)

__all__ = [
    "DistributionParams",
    "EulerParams",
    "WEIGHTINGS",
    "closed_form",
    "distribution_rhs_genocchi",
    "distribution_rhs_plain",
    "distribution_rhs_special",
    "euler_hq_poly",
    "euler_hq_special",
    "euler_q",
    "euler_q_poly",
    "euler_series_partials",
    "euler_series_truncated",
    "genocchi_hq_poly",
    "genocchi_q_poly",
    "series_coefficient",
    "series_tail_bound",
]


def _check_indices(n: int, r: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"index n must be a nonnegative integer, got {n!r}")
    if not isinstance(r, int) or r < 1:
        raise DomainError(f"order r must be a positive integer, got {r!r}")


def _check_q(q: Fraction, need_inverse: bool = False) -> None:
    if q == 1:
        raise DomainError(
            "q = 1 is the classical limit; use powerseries.classical_w_euler_coeffs"
        )
    if need_inverse and q == 0:
        raise DomainError("q = 0 is not allowed here (q^-1 is needed)")


def _plain_denominators(n: int, w: Fraction, q: Fraction) -> list[Fraction]:
    out = []
    for l in range(n + 1):
        den = 1 + q**l * w
        if den == 0:
            raise DomainError(f"1 + q^l w vanishes at l={l} (q={q}, w={w})")
        out.append(den)
    return out


def euler_q(n: int, r: int, w, q) -> Fraction:
    """E^{(r)}_{n,w,q} via 2^r/(1-q)^n sum_l C(n,l) (-1)^l (1+q^l w)^{-r}."""
    _check_indices(n, r)
    w, q = as_fraction(w), as_fraction(q)
    _check_q(q)
    dens = _plain_denominators(n, w, q)
    total = Fraction(0)
    for l, den in enumerate(dens):
        term = Fraction(math.comb(n, l)) / den**r
        total += -term if l & 1 else term
    return 2**r * total / (1 - q) ** n


def euler_q_poly(n: int, r: int, w, x: ArgSpec) -> Fraction:
    """E^{(r)}_{n,w,q}(x), q = x.u ** x.d."""
    _check_indices(n, r)
    w = as_fraction(w)
    q = x.q
    _check_q(q)
    dens = _plain_denominators(n, w, q)
    total = Fraction(0)
    for l, den in enumerate(dens):
        term = math.comb(n, l) * x.q_power(l) / den**r
        total += -term if l & 1 else term
    return 2**r * total / (1 - q) ** n


def genocchi_q_poly(m: int, r: int, w, x: ArgSpec) -> Fraction:
    """G^{(r)}_{m,w,q}(x): zero below index r, else r! C(m,r) E^{(r)}_{m-r,w,q}(x)."""
    _check_indices(m, r)
    if m < r:
        return Fraction(0)
    return math.factorial(r) * math.comb(m, r) * euler_q_poly(m - r, r, w, x)


def _hq_denominators(n: int, r: int, h: int, w: Fraction, q: Fraction, ascending: bool):
    """(-q^{l+h} w : q^{-1})_r, or (-q^l w : q)_r when ``ascending``, for each l.

    Every factor is scanned first so a failure names its (l, j).
    """
    for l in range(n + 1):
        for j in range(r):
            e = l + j if ascending else l + h - j
            if 1 + q**e * w == 0:
                raise DomainError(
                    f"shift factorial vanishes at l={l}, j={j}: 1 + q^{e} w = 0 (q={q}, w={w})"
                )
    if ascending:
        return [q_shift_factorial(-(q**l) * w, q, r) for l in range(n + 1)]
    return [q_shift_factorial(-(q ** (l + h)) * w, 1 / q, r) for l in range(n + 1)]


def euler_hq_poly(n: int, r: int, h: int, w, x: ArgSpec) -> Fraction:
    """E^{(h,r)}_{n,w,q}(x) from the descending shift factorial (-q^{l+h} w : q^{-1})_r."""
    _check_indices(n, r)
    if not isinstance(h, int):
        raise DomainError(f"h must be an integer, got {h!r}")
    w = as_fraction(w)
    q = x.q
    _check_q(q, need_inverse=True)
    dens = _hq_denominators(n, r, h, w, q, ascending=False)
    total = Fraction(0)
    for l, den in enumerate(dens):
        term = math.comb(n, l) * x.q_power(l) / den
        total += -term if l & 1 else term
    return 2**r * total / (1 - q) ** n


def euler_hq_special(n: int, r: int, w, x: ArgSpec) -> Fraction:
    """E^{(r-1,r)}_{n,w,q}(x) from the ascending shift factorial (-q^l w : q)_r.

    Deliberately shares no code with :func:`euler_hq_poly` beyond the
    primitive shift factorial, so the two can check each other.
    """
    _check_indices(n, r)
    w = as_fraction(w)
    q = x.q
    _check_q(q)
    dens = _hq_denominators(n, r, r - 1, w, q, ascending=True)
    total = Fraction(0)
    for l, den in enumerate(dens):
        term = math.comb(n, l) * x.q_power(l) / den
        total += -term if l & 1 else term
    return 2**r * total / (1 - q) ** n


def genocchi_hq_poly(m: int, r: int, h: int, w, x: ArgSpec) -> Fraction:
    _check_indices(m, r)
    if m < r:
        return Fraction(0)
    return math.factorial(r) * math.comb(m, r) * euler_hq_poly(m - r, r, h, w, x)


@dataclass(frozen=True)
class EulerParams:
    """Inputs of one Euler-family value. ``h is None`` selects the plain family."""

    n: int
    r: int
    w: Fraction
    x: ArgSpec
    h: Optional[int] = None

    def __post_init__(self):
        _check_indices(self.n, self.r)
        object.__setattr__(self, "w", as_fraction(self.w))

    @property
    def q(self) -> Fraction:
        return self.x.q

    @property
    def kind(self) -> str:
        if self.h is None:
            return "plain"
        return "special" if self.h == self.r - 1 else "hq"


def closed_form(params: EulerParams) -> Fraction:
    p = params
    if p.h is None:
        return euler_q_poly(p.n, p.r, p.w, p.x)
    return euler_hq_poly(p.n, p.r, p.h, p.w, p.x)


def series_coefficient(p: EulerParams, m: int) -> Fraction:
    """Coefficient of [m+x]_q^n in the m-series, without the 2^r prefactor."""
    sign = -1 if m & 1 else 1
    if p.kind == "plain":
        return sign * math.comb(m + p.r - 1, m) * p.w**m
    q = p.q
    if p.kind == "special":
        return sign * gauss_binomial_eval(m + p.r - 1, m, q) * p.w**m
    return sign * gauss_binomial_eval(m + p.r - 1, m, 1 / q) * q ** (p.h * m) * p.w**m


def euler_series_partials(params: EulerParams, M: int) -> Iterator[Fraction]:
    """Yield the partial sums for 0, 1, ..., M terms of the m-series."""
    p = params
    if p.kind != "plain" and p.q == 0:
        raise DomainError("q = 0 is not allowed in the (h,q) series")
    scale = 2**p.r
    total = Fraction(0)
    yield total
    for m in range(M):
        b = q_bracket_frac(p.x, m)
        if b != 0 or p.n == 0:
            total += series_coefficient(p, m) * b**p.n
        yield scale * total


def euler_series_truncated(params: EulerParams, M: int) -> Fraction:
    """Partial sum over m < M of the infinite-series form of the family.

    plain:   2^r sum C(m+r-1, m) (-w)^m [m+x]_q^n
    (h,q):   2^r sum C(m+r-1, m)_{q^-1} (-1)^m q^{hm} w^m [m+x]_q^n
    h = r-1: 2^r sum C(m+r-1, m)_q (-w)^m [m+x]_q^n
    """
    for total in euler_series_partials(params, M):
        pass
    return total


def series_tail_bound(params: EulerParams, M: int) -> Fraction:
    """Upper bound on |closed_form - euler_series_truncated(M)|.

    Needs |q| < 1, x = s/d with s >= 0 and |u| <= 1, and for the (h,q)
    families h >= r - 1. Then |[m+x]_q| <= B = 2/|1-q|, and with
    rho = |w| (plain) or |q|^{h-r+1} |w| (h,q), rho < 1:

      plain: 2^r B^n C(M+r-1, r-1) rho^M / (1-rho)^r
      (h,q): 2^r B^n rho^M / ((1-rho) prod_{j<r} (1-|q|^j))

    The Gaussian-binomial bound uses |C(k+r-1, k)_q| <= 1/(|q|;|q|)_{r-1}.
    """
    p = params
    q = p.q
    aq = abs(q)
    if not aq < 1:
        raise DomainError("tail bound needs |q| < 1")
    if p.x.s < 0 or abs(p.x.u) > 1:
        raise DomainError("tail bound needs x = s/d with s >= 0 and |u| <= 1")
    B = Fraction(2) / abs(1 - q)
    if p.kind == "plain":
        rho = abs(p.w)
        if not rho < 1:
            raise DomainError("tail bound needs |w| < 1")
        return 2**p.r * B**p.n * math.comb(M + p.r - 1, p.r - 1) * rho**M / (1 - rho) ** p.r
    if p.h < p.r - 1:
        raise DomainError("tail bound needs h >= r - 1")
    rho = aq ** (p.h - p.r + 1) * abs(p.w)
    if not rho < 1:
        raise DomainError("tail bound needs |q|^{h-r+1} |w| < 1")
    gb = Fraction(1)
    for j in range(1, p.r):
        gb /= 1 - aq**j
    return 2**p.r * B**p.n * gb * rho**M / (1 - rho)


# -- distribution relations -------------------------------------------------

@dataclass(frozen=True)
class DistributionParams:
    """A left-hand side ``base`` (integer x) and an odd modulus ``d``."""

    base: EulerParams
    d: int

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1 or self.d % 2 == 0:
            raise DomainError(f"d must be an odd positive integer, got {self.d!r}")
        if self.base.x.d != 1:
            raise DomainError("distribution relations need an integer argument x")


def _inner_arg(params: DistributionParams, shift: int) -> ArgSpec:
    # (q^d)^{1/d} = q, so the root is the base q itself
    return ArgSpec(shift + params.base.x.s, params.d, params.base.q)


def _twisted_tuples(params: DistributionParams):
    r, d = params.base.r, params.d
    return product(range(d), repeat=r)


def distribution_rhs_plain(params: DistributionParams) -> Fraction:
    """[d]_q^n sum_a w^{|a|} (-1)^{|a|} E^{(r)}_{n, w^d, q^d}((|a| + x)/d)."""
    b = params.base
    q, w, d = b.q, b.w, params.d
    _check_q(q)
    wd = w**d
    total = Fraction(0)
    for a in _twisted_tuples(params):
        s = sum(a)
        try:
            inner = euler_q_poly(b.n, b.r, wd, _inner_arg(params, s))
        except DomainError as exc:
            raise DomainError(f"at a={a}: {exc}") from exc
        term = w**s * inner
        total += -term if s & 1 else term
    return q_bracket(d, q) ** b.n * total


def distribution_rhs_genocchi(params: DistributionParams) -> Fraction:
    """Genocchi form at index n + r, evaluated through :func:`genocchi_q_poly`."""
    b = params.base
    q, w, d = b.q, b.w, params.d
    _check_q(q)
    wd = w**d
    total = Fraction(0)
    for a in _twisted_tuples(params):
        s = sum(a)
        try:
            inner = genocchi_q_poly(b.n + b.r, b.r, wd, _inner_arg(params, s))
        except DomainError as exc:
            raise DomainError(f"at a={a}: {exc}") from exc
        term = w**s * inner
        total += -term if s & 1 else term
    return q_bracket(d, q) ** b.n * total


# exponent weight of a_i (i = 1..r) in the twist q^{sum weight(r, i) a_i}
WEIGHTINGS = {
    "r-i": lambda r, i: r - i,
    "r-i+1": lambda r, i: r - i + 1,
}


def distribution_rhs_special(params: DistributionParams, weighting: str = "r-i") -> Fraction:
    """Twisted sum for the h = r - 1 family.

    [d]_q^n sum_a q^{sum_i c_i a_i} (-1)^{|a|} w^{|a|} E^{(r-1,r)}_{n,w^d,q^d}((|a|+x)/d)
    with c_i = WEIGHTINGS[weighting](r, i), i = 1..r.
    """
    b = params.base
    q, w, d, r = b.q, b.w, params.d, b.r
    _check_q(q)
    try:
        weight = WEIGHTINGS[weighting]
    except KeyError:
        raise DomainError(f"unknown weighting {weighting!r}; choose from {sorted(WEIGHTINGS)}")
    cs = [weight(r, i) for i in range(1, r + 1)]
    wd = w**d
    total = Fraction(0)
    for a in _twisted_tuples(params):
        s = sum(a)
        try:
            inner = euler_hq_special(b.n, r, wd, _inner_arg(params, s))
        except DomainError as exc:
            raise DomainError(f"at a={a}: {exc}") from exc
        term = q ** sum(c * ai for c, ai in zip(cs, a)) * w**s * inner
        total += -term if s & 1 else term
    return q_bracket(d, q) ** b.n * total
