"""Pure-Python kernels. Reference behaviour for the compiled ``_kernels``."""

from __future__ import annotations

from itertools import product
from typing import Sequence


def lattice_sum(
    a: Sequence[int],
    b: Sequence[int],
    coef: Sequence[int],
    offset: int,
    size: int,
) -> int:
    """Sum ``a[x_1+...+x_r] * b[c_1 x_1 + ... + c_r x_r - offset]`` over the box.

    The box is ``[0, size)^r`` with ``r = len(coef)``. Every tuple is
    visited; nothing is grouped or factored.
    """
    total = 0
    for xs in product(range(size), repeat=len(coef)):
        e = -offset
        for c, x in zip(coef, xs):
            e += c * x
        total += a[sum(xs)] * b[e]
    return total


def int_convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Coefficient list of the product of two integer polynomials."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out
