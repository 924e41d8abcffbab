# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled reduced row echelon form over GF(p)."""

import numpy as np
cimport numpy as cnp

ctypedef cnp.int64_t i64


def rref_inplace(i64[:, ::1] A, long p):
    """Reduce ``A`` (entries in [0, p)) to RREF in place; return pivot columns."""
    cdef Py_ssize_t m = A.shape[0], n = A.shape[1]
    cdef Py_ssize_t row = 0, col, r, k
    cdef i64 piv, inv, f, tmp
    cdef Py_ssize_t nnz, j
    cdef cnp.ndarray[cnp.intp_t, ndim=1] nzbuf = np.empty(n, dtype=np.intp)
    cdef cnp.intp_t[::1] nz = nzbuf
    pivots = []
    for col in range(n):
        if row >= m:
            break
        r = row
        while r < m and A[r, col] == 0:
            r += 1
        if r == m:
            continue
        if r != row:
            for k in range(col, n):
                tmp = A[r, k]
                A[r, k] = A[row, k]
                A[row, k] = tmp
        piv = A[row, col]
        inv = _inverse(piv, p)
        if inv != 1:
            for k in range(col, n):
                A[row, k] = (A[row, k] * inv) % p
        nnz = 0
        for k in range(col, n):
            if A[row, k] != 0:
                nz[nnz] = k
                nnz += 1
        for r in range(m):
            if r == row:
                continue
            f = A[r, col]
            if f == 0:
                continue
            f = p - f
            for j in range(nnz):
                k = nz[j]
                A[r, k] = (A[r, k] + f * A[row, k]) % p
        pivots.append(col)
        row += 1
    return pivots


cdef i64 _inverse(i64 a, long p):
    cdef i64 result = 1, base = a % p
    cdef long e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result
