import math
from fractions import Fraction as F

import pytest
import sympy as sp

from qeuler.powerseries import (
    TruncatedSeries,
    classical_genocchi_coeffs,
    classical_genocchi_order_coeffs,
    classical_w_euler_coeffs,
    cos_generating_coeffs,
    ps_exp_linear,
    ps_mul,
    ps_recip,
)
from qeuler.qcalc import DomainError, negbinom_series_coeff, q_shift_factorial

t = sp.symbols("t")


def sympy_egf(expr, K):
    """n! [t^n] expr for n <= K by sympy's symbolic Taylor expansion."""
    ser = sp.series(expr, t, 0, K + 1).removeO()
    out = []
    for n in range(K + 1):
        c = sp.Rational(sp.simplify(ser.coeff(t, n) * sp.factorial(n)))
        out.append(F(int(c.p), int(c.q)))
    return out


def test_exp_linear_examples():
    assert ps_exp_linear(0, 4) == TruncatedSeries([1], 4)
    assert ps_exp_linear(1, 3) == TruncatedSeries([1, 1, F(1, 2), F(1, 6)])
    assert ps_exp_linear(F(1, 2), 2) == TruncatedSeries([1, F(1, 2), F(1, 8)])


def test_arithmetic_examples():
    s = TruncatedSeries([F(2), F(-1, 3), 5, 7])
    assert ps_mul(s, TruncatedSeries([1], 3)) == s
    assert ps_recip(TruncatedSeries([1, 1], 3)) == TruncatedSeries([1, -1, 1, -1])
    assert ps_mul(ps_recip(s), s) == TruncatedSeries([1], 3)
    with pytest.raises(DomainError):
        ps_recip(TruncatedSeries([0, 1], 3))


def test_trusted_order_is_min():
    a, b = TruncatedSeries([1, 2, 3, 4]), TruncatedSeries([1, 1])
    assert (a * b).order == 1
    assert (a + b).order == 1


def test_classical_euler_examples():
    assert classical_w_euler_coeffs(1, 1, 0, 3) == [1, F(-1, 2), 0, F(1, 4)]
    assert classical_w_euler_coeffs(1, 1, F(1, 2), 1)[1] == 0
    assert classical_w_euler_coeffs(2, 1, 0, 0) == [1]
    with pytest.raises(DomainError):
        classical_w_euler_coeffs(1, -1, 0, 3)


def test_classical_genocchi_examples():
    g = classical_genocchi_coeffs(1, 4)
    assert g == [0, 1, -1, 0, 1]
    assert classical_genocchi_coeffs(F(3, 7), 5)[0] == 0


@pytest.mark.parametrize("r", [1, 2, 3])
@pytest.mark.parametrize("w", [F(1), F(1, 2), F(-2, 3)])
@pytest.mark.parametrize("x", [F(0), F(1, 3)])
def test_w_euler_against_sympy(r, w, x):
    expr = (2 / (sp.Rational(w.numerator, w.denominator) * sp.exp(t) + 1)) ** r * sp.exp(
        sp.Rational(x.numerator, x.denominator) * t
    )
    assert classical_w_euler_coeffs(r, w, x, 7) == sympy_egf(expr, 7)


@pytest.mark.parametrize("r", [1, 2])
@pytest.mark.parametrize("w", [F(1), F(1, 2)])
def test_w_genocchi_order_against_sympy(r, w):
    expr = (2 * t / (sp.Rational(w.numerator, w.denominator) * sp.exp(t) + 1)) ** r
    assert classical_genocchi_order_coeffs(r, w, 0, 7) == sympy_egf(expr, 7)


def test_order_r_multiplicativity():
    K = 8
    for w in (F(1), F(1, 2)):
        base = ps_recip(ps_exp_linear(1, K) * w + TruncatedSeries([1], K)) * 2
        acc = TruncatedSeries([1], K)
        for r in (1, 2, 3):
            acc = ps_mul(acc, base)
            assert classical_w_euler_coeffs(r, w, 0, K) == [c * math.factorial(n) for n, c in enumerate(acc.coeffs)]


def test_genocchi_euler_bridge():
    for w in (F(1), F(1, 2)):
        g = classical_genocchi_coeffs(w, 8)
        e = classical_w_euler_coeffs(1, w, 0, 7)
        for n in range(8):
            assert g[n + 1] / (n + 1) == e[n]


def test_cos_examples():
    g = cos_generating_coeffs(0, 1, F(2, 9), 4)
    assert g[1] == 1 and g[2] == -1
    assert cos_generating_coeffs(1, 1, F(1, 2), 1)[1] == F(4, 3)
    g2 = cos_generating_coeffs(5, 2, F(1, 3), 3)
    assert g2[0] == 0 and g2[1] == 0
    with pytest.raises(DomainError):
        cos_generating_coeffs(1, 1, -1, 3)


def test_cos_at_q_one_is_order_r_genocchi():
    for r in (1, 2, 3):
        assert cos_generating_coeffs(r - 1, r, 1, 8) == classical_genocchi_order_coeffs(r, 1, 0, 8)


@pytest.mark.parametrize("q", [F(1, 2), F(-1, 3), F(3, 4)])
def test_cos_against_sympy(q):
    sq = sp.Rational(q.numerator, q.denominator)
    for h, r in ((2, 2), (0, 2), (3, 3)):
        expr = 2**r * t**r
        for i in range(1, r + 1):
            expr = expr / (sq ** (h - i + 1) * sp.exp(t) + 1)
        assert cos_generating_coeffs(h, r, q, 6) == sympy_egf(expr, 6)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
@pytest.mark.parametrize("q", [F(1, 2), F(-2, 5)])
def test_q_binomial_theorem(r, q):
    # (z:q)_r as a polynomial in z, then inverted as a series
    K = 9
    poly = TruncatedSeries([1], K)
    for i in range(r):
        poly = ps_mul(poly, TruncatedSeries([1, -(q**i)], K))
    inv = ps_recip(poly)
    for m in range(K + 1):
        assert inv[m] == negbinom_series_coeff(r, m, q)
    # sanity: (z:q)_r at z = 1/2 through the shift factorial
    assert sum(c * F(1, 2) ** k for k, c in enumerate(poly.coeffs)) == q_shift_factorial(F(1, 2), q, r)


@pytest.mark.parametrize("r", [1, 2, 3])
@pytest.mark.parametrize("w", [F(1), F(1, 2), F(2, 5)])
def test_bounded_denominators(r, w):
    K = 12
    c = w.numerator + w.denominator
    for n, v in enumerate(classical_w_euler_coeffs(r, w, 0, K)):
        assert (c ** (r * (n + 1))) % v.denominator == 0
    if w == 1:
        assert all(v.denominator == 1 for v in classical_genocchi_coeffs(1, K))
