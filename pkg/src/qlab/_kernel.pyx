# cython: boundscheck=False, wraparound=False
"""Compiled term generator for the Q-recurrence.

Mirrors the contract of ``_fallback.q_generate`` in checked (int64) mode,
returning a numpy array instead of a list.
"""

from libc.limits cimport LLONG_MAX, LLONG_MIN

import numpy as np


def q_generate(const long long[::1] prefix, bint zero_extended, Py_ssize_t max_terms):
    """Extend ``prefix`` under Q(n) = Q(n-Q(n-1)) + Q(n-Q(n-2)).

    Returns ``(terms, status, at_index)`` with ``terms`` an int64 array of
    the produced terms; status 0 alive, 1 died, 2 ended, 3 overflow.
    """
    cdef Py_ssize_t k = prefix.shape[0]
    out = np.empty(max_terms, dtype=np.int64)
    cdef long long[::1] t = out
    cdef Py_ssize_t i, n
    cdef long long v, a, b
    cdef int status = 0
    cdef Py_ssize_t at = 0

    for i in range(k):
        t[i] = prefix[i]
    n = k + 1
    while n <= max_terms:
        v = t[n - 2]
        if v <= 0:
            status = 2 if zero_extended else 1
            at = n
            break
        if v >= n:
            if not zero_extended:
                status = 1
                at = n
                break
            a = 0
        else:
            a = t[n - 1 - v]
        v = t[n - 3]
        if v <= 0:
            status = 2 if zero_extended else 1
            at = n
            break
        if v >= n:
            if not zero_extended:
                status = 1
                at = n
                break
            b = 0
        else:
            b = t[n - 1 - v]
        if (b > 0 and a > LLONG_MAX - b) or (b < 0 and a < LLONG_MIN - b):
            status = 3
            at = n
            break
        t[n - 1] = a + b
        n += 1

    if status == 0:
        return out, 0, 0
    return out[: n - 1].copy(), status, at
