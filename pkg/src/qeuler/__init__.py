"""Exact q- and (h,q)-extensions of higher-order w-Euler and w-Genocchi numbers.

Submodules: ``qcalc`` (q-calculus primitives), ``ratfunc`` (rational
functions and Abel-regularized sums), ``powerseries`` (generating
functions), ``engine`` (the number families and distribution relations),
``padic_oracle`` (brute-force fermionic p-adic integrals), ``cli``.
"""

from .engine import (
    DistributionParams,
    EulerParams,
    distribution_rhs_genocchi,
    distribution_rhs_plain,
    distribution_rhs_special,
    euler_hq_poly,
    euler_hq_special,
    euler_q,
    euler_q_poly,
    euler_series_truncated,
    genocchi_hq_poly,
    genocchi_q_poly,
)
from .kernels import BACKEND
from .qcalc import ArgSpec, DomainError

__version__ = "0.1.0"
