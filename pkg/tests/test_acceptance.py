"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

The lines are also collected and repeated in the pytest terminal summary
under "acceptance criteria".
"""

import math
import subprocess
import sys
import time
from fractions import Fraction as F

from conftest import ACCEPTANCE_LINES, gauss_binomial_by_subsets
from qeuler import engine, powerseries, ratfunc, verify
from qeuler.padic_oracle import PadicDomain, witt_check_plain
from qeuler.qcalc import (
    gauss_binomial_eval,
    gauss_binomial_poly,
    negbinom_series_coeff,
    q_bracket,
    q_shift_factorial,
)


def report(num: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {num}: {title}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def _timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def _suite_summary(cases, noun="exact"):
    bad = [c for c in cases if c.fatal and not c.passed]
    return bad, f"{len(cases) - len(bad)}/{len(cases)} {noun}" + (f"; first failure: {bad[0].label} {bad[0].detail}" if bad else "")


def test_criterion_1_distribution():
    cases, dt = _timed(lambda: list(verify.distribution("full")))
    bad, detail = _suite_summary(cases)
    assert len(cases) == 2 * 3 * 6 * 3 * 3 * 3
    report(1, "distribution relation, Euler and Genocchi forms", not bad and dt < 10, f"{detail}, {dt:.1f}s")


def test_criterion_2_special_equivalence():
    cases = [c for c in verify.special("full") if c.label.startswith("equivalence")]
    bad, detail = _suite_summary(cases)
    assert len(cases) == 3 * 6 * 3 * 3
    report(2, "h = r-1 special form equals the (h,q) form", not bad, detail)


def test_criterion_3_special_distribution():
    cases, dt = _timed(lambda: list(verify.special_weighting("small")))
    default = next(c for c in cases if c.label == "weighting r-i")
    resolution = next(c for c in cases if c.label == "resolution")
    # pass if the default interpretation is exact, or the absence of one is flagged
    ok = (default.passed or resolution.detail.startswith("FINDING")) and dt < 10
    report(3, "special distribution relation under the default weighting", ok,
           f"r-i: {default.detail}; {resolution.detail}; {dt:.1f}s")


def test_criterion_4_cos_formula():
    cases, dt = _timed(lambda: list(verify.cos_formula("full")))
    bad, detail = _suite_summary(cases)
    anchor = verify.cos_formula_sides(1, 1, F(1, 2))
    ok = not bad and anchor == (-1, -1) and dt < 5
    report(4, "regularized closed formula matches the generating function", ok,
           f"{detail}, anchor G_2 = {anchor[0]}, {anchor[1]}, {dt:.1f}s")


def test_criterion_5_witt():
    start = time.perf_counter()
    failures = []
    total = 0
    for case in verify.witt_grid("full"):
        total += 1
        rep = verify.run_witt_case(*case)
        if not rep.passes:
            kind, n, r, h, w, x, dom, _ = case
            failures.append(f"{kind} p={dom.p} w={w} r={r} h={h} n={n} x={x} valuations={tuple(rep.valuations)}")
    dt = time.perf_counter() - start
    anchor = witt_check_plain(1, 1, 1, 0, PadicDomain(3, 4), 4).valuations
    ok = not failures and anchor[:2] == [1, 2] and dt < 30
    detail = f"{total - len(failures)}/{total} reports pass, anchor valuations {tuple(anchor)}, {dt:.1f}s"
    if failures:
        detail += "; failing: " + "; ".join(failures)
    report(5, "fermionic Witt sums converge to the closed forms", ok, detail)


def test_criterion_6_series():
    cases, dt = _timed(lambda: list(verify.series("full")))
    bad, detail = _suite_summary(cases, "within tolerance")
    report(6, "truncated series converge to the closed forms", not bad and dt < 5, f"{detail}, {dt:.1f}s")


def test_criterion_7_classical_limits():
    E = powerseries.classical_w_euler_coeffs(1, 1, 0, 4)
    problems = []
    for n in range(5):
        errs = [abs(engine.euler_q(n, 1, 1, 1 - F(1, 2**k)) - E[n]) for k in range(3, 13)]
        if all(e == 0 for e in errs):
            continue  # exact agreement at every q_k (n = 0)
        if not all(a > b for a, b in zip(errs, errs[1:])):
            problems.append(f"n={n} not strictly decreasing")
        if not errs[-1] < errs[0] / 100:
            problems.append(f"n={n} error(12)/error(3) = {float(errs[-1] / errs[0]):.3g}")
    anchors = [1, -1, 0, 1]
    ps = powerseries.classical_genocchi_coeffs(1, 4)[1:5]
    cos_route = [
        2 * math.factorial(1) * math.comb(m, 1) * ratfunc.regularized_alt_qbinom_sum(m - 1, 1, F(1, 2), 1)
        for m in range(1, 5)
    ]
    if ps != anchors:
        problems.append(f"powerseries Genocchi {ps}")
    if cos_route != anchors:
        problems.append(f"regularized route Genocchi {cos_route}")
    report(7, "q -> 1 limits and classical Genocchi anchors", not problems,
           "; ".join(problems) or "E_n(0) limits for n <= 4, G_1..G_4 = 1, -1, 0, 1")


def test_criterion_8_qcalc():
    start = time.perf_counter()
    problems = []
    for n in range(13):
        for k in range(n + 1):
            c = gauss_binomial_poly(n, k)
            if c != gauss_binomial_poly(n, n - k):
                problems.append(f"symmetry {n},{k}")
            if list(c.coeffs) != gauss_binomial_by_subsets(n, k):
                problems.append(f"subset count {n},{k}")
            if 0 < k < n:
                q = F(2, 3)
                lhs = gauss_binomial_eval(n, k, q)
                rhs = gauss_binomial_eval(n - 1, k - 1, q) + q**k * gauss_binomial_eval(n - 1, k, q)
                if lhs != rhs:
                    problems.append(f"q-Pascal {n},{k}")
    for a, q in ((F(1, 3), F(2, 5)), (F(-2), F(3, 7))):
        for k in range(8):
            if q_shift_factorial(a, q, k + 1) != q_shift_factorial(a, q, k) * (1 - a * q**k):
                problems.append(f"shift recurrence k={k}")
    for q in (F(1, 2), F(-3), F(5, 4)):
        for m in range(6):
            for n in range(6):
                if q_bracket(m + n, q) != q_bracket(m, q) + q**m * q_bracket(n, q):
                    problems.append(f"bracket addition {m},{n}")
    # coefficients of 1/(z:q)_r by series inversion versus the Gaussian formula
    for r in range(1, 5):
        q = F(1, 3)
        den = powerseries.TruncatedSeries.constant(1, 9)
        for i in range(r):
            den = den * powerseries.TruncatedSeries([1, -(q**i)], 9)
        inv = powerseries.ps_recip(den)
        if [inv[m] for m in range(10)] != [negbinom_series_coeff(r, m, q) for m in range(10)]:
            problems.append(f"q-binomial theorem r={r}")
    dt = time.perf_counter() - start
    report(8, "q-calculus property suite", not problems and dt < 5,
           "; ".join(problems[:5]) or f"all identities exact, {dt:.1f}s")


def test_criterion_9_cli():
    def cli(*argv):
        return subprocess.run([sys.executable, "-m", "qeuler", *argv], capture_output=True)

    problems = []
    v = cli("verify", "all", "--grid", "small")
    if v.returncode != 0:
        problems.append(f"verify exit {v.returncode}")
    args = ("compute", "--family", "euler_q", "--n", "1", "--r", "1", "--w", "1", "--q", "4")
    a, b = cli(*args), cli(*args)
    if a.returncode != 0 or a.stdout != b"-1/5\n":
        problems.append(f"compute printed {a.stdout!r}")
    if a.stdout != b.stdout:
        problems.append("compute not byte-stable")
    t = ("table", "--family", "euler_hq_poly", "--n-max", "3", "--r", "1:2", "--h", "0,1", "--q", "1/2", "--format", "json")
    if cli(*t).stdout != cli(*t).stdout:
        problems.append("table not byte-stable")
    if cli("verify", "all", "--grid", "small").stdout != v.stdout:
        problems.append("verify not byte-stable")
    report(9, "CLI contract", not problems, "; ".join(problems) or "verify exit 0, compute prints -1/5, byte-stable")
