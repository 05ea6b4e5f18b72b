# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; same contracts as ``_kernels_py``."""

from libc.stdlib cimport malloc, free


def lattice_sum(a, b, coef, Py_ssize_t offset, Py_ssize_t size):
    cdef Py_ssize_t r = len(coef)
    cdef Py_ssize_t i, s, e
    cdef Py_ssize_t *x
    cdef Py_ssize_t *c
    cdef list la = list(a)
    cdef list lb = list(b)
    cdef object total = 0
    if size <= 0:
        return 0
    if r == 0:
        return la[0] * lb[-offset]
    x = <Py_ssize_t *> malloc(r * sizeof(Py_ssize_t))
    c = <Py_ssize_t *> malloc(r * sizeof(Py_ssize_t))
    if x == NULL or c == NULL:
        free(x)
        free(c)
        raise MemoryError()
    try:
        for i in range(r):
            x[i] = 0
            c[i] = coef[i]
        s = 0
        e = -offset
        while True:
            # innermost coordinate runs contiguously
            for i in range(size):
                total += la[s + i] * lb[e + i * c[r - 1]]
            # odometer carry over the outer coordinates
            i = r - 2
            while i >= 0:
                x[i] += 1
                s += 1
                e += c[i]
                if x[i] < size:
                    break
                s -= size
                e -= size * c[i]
                x[i] = 0
                i -= 1
            if i < 0:
                break
    finally:
        free(x)
        free(c)
    return total


def int_convolve(a, b):
    cdef list la = list(a)
    cdef list lb = list(b)
    cdef Py_ssize_t na = len(la), nb = len(lb), i, j
    cdef list out
    if na == 0 or nb == 0:
        return []
    out = [0] * (na + nb - 1)
    for i in range(na):
        ai = la[i]
        if ai:
            for j in range(nb):
                out[i + j] += ai * lb[j]
    return out
