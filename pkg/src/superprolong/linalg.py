"""Exact linear algebra over GF(p) on dense int64 numpy arrays.

The row reduction kernel comes from the compiled ``_rref`` extension when it
is importable and falls back to a vectorized numpy loop otherwise.  Set
``SUPERPROLONG_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

import numpy as np

from .gfp import inverse


def _rref_inplace_py(A: np.ndarray, p: int) -> list:
    m, n = A.shape
    row = 0
    pivots = []
    for col in range(n):
        if row >= m:
            break
        nz = np.flatnonzero(A[row:, col])
        if nz.size == 0:
            continue
        r = row + int(nz[0])
        if r != row:
            A[[row, r]] = A[[r, row]]
        inv = inverse(int(A[row, col]), p)
        if inv != 1:
            A[row, col:] = A[row, col:] * inv % p
        others = np.flatnonzero(A[:, col])
        others = others[others != row]
        if others.size:
            f = A[others, col][:, None]
            A[others, col:] = (A[others, col:] - f * A[row, col:]) % p
        pivots.append(col)
        row += 1
    return pivots


try:
    if os.environ.get("SUPERPROLONG_PURE"):
        raise ImportError("pure mode requested")
    from ._rref import rref_inplace as _rref_inplace_c
except ImportError:  # extension not built
    _rref_inplace_c = None

BACKEND = "compiled" if _rref_inplace_c is not None else "python"


def rref_inplace(A: np.ndarray, p: int, backend: str | None = None) -> list:
    backend = backend or BACKEND
    if backend == "compiled":
        if _rref_inplace_c is None:
            raise RuntimeError("compiled kernel is not available")
        return list(_rref_inplace_c(A, p))
    return _rref_inplace_py(A, p)


def as_matrix(rows, ncols: int) -> np.ndarray:
    if len(rows) == 0:
        return np.zeros((0, ncols), dtype=np.int64)
    return np.ascontiguousarray(np.array(rows, dtype=np.int64).reshape(len(rows), ncols))


def rref(A, p: int, backend: str | None = None):
    """Reduced row echelon form with zero rows dropped, and the pivot columns."""
    A = np.array(A, dtype=np.int64, copy=True, order="C") % p
    if A.ndim != 2:
        raise ValueError("expected a 2-d array")
    pivots = rref_inplace(A, p, backend)
    return np.ascontiguousarray(A[: len(pivots)]), pivots


def rank(A, p: int) -> int:
    return len(rref(A, p)[1])


def nullspace(A, p: int, backend: str | None = None) -> np.ndarray:
    """Basis (as rows, in RREF) of {x : A x = 0}."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[1]
    R, pivots = rref(A, p, backend)
    piv = set(pivots)
    free = [j for j in range(n) if j not in piv]
    K = np.zeros((len(free), n), dtype=np.int64)
    if free:
        K[np.arange(len(free)), free] = 1
        if pivots:
            K[:, pivots] = (-R[:, free].T) % p
    if len(K):
        K, _ = rref(K, p, backend)
    return K


def echelon(rows, p: int, ncols: int | None = None):
    """Canonical RREF basis of the row span."""
    if ncols is None:
        ncols = np.asarray(rows).shape[1]
    return rref(as_matrix(rows, ncols), p)


def reduce_vector(v, E: np.ndarray, pivots: list, p: int) -> np.ndarray:
    """Remainder of ``v`` after clearing the pivot columns of RREF basis ``E``."""
    v = np.array(v, dtype=np.int64) % p
    for i, c in enumerate(pivots):
        if v[c]:
            v = (v - v[c] * E[i]) % p
    return v


def reduce_rows(V: np.ndarray, E: np.ndarray, pivots: list, p: int) -> np.ndarray:
    V = np.array(V, dtype=np.int64) % p
    if len(pivots) and len(V):
        coeffs = V[:, pivots]
        V = (V - coeffs @ E) % p
    return V


def coordinates(v, E: np.ndarray, pivots: list, p: int):
    """Coordinates of ``v`` in the RREF basis ``E``, or None if outside the span."""
    v = np.array(v, dtype=np.int64) % p
    coords = v[pivots] if len(pivots) else np.zeros(0, dtype=np.int64)
    rem = v.copy()
    if len(pivots):
        rem = (rem - coords @ E) % p
    if rem.any():
        return None
    return coords


def in_span(v, E, pivots, p) -> bool:
    return coordinates(v, E, pivots, p) is not None


def intersect_rowspaces(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """RREF basis of rowspace(A) ∩ rowspace(B)."""
    n = A.shape[1]
    if len(A) == 0 or len(B) == 0:
        return np.zeros((0, n), dtype=np.int64)
    # x A = y B  <=>  [x | y] [A; -B] = 0
    M = np.vstack([A, (-B) % p]).T
    K = nullspace(M, p)
    if len(K) == 0:
        return np.zeros((0, n), dtype=np.int64)
    rows = K[:, : len(A)] @ A % p
    return rref(rows, p)[0]


def solve(A, b, p: int):
    """One solution x of A x = b, or None."""
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1)
    aug = np.hstack([A, b])
    R, pivots = rref(aug, p)
    n = A.shape[1]
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = R[i, n]
    return x


def normalize(v, p: int) -> np.ndarray:
    """Scale so the first nonzero coordinate is 1."""
    v = np.array(v, dtype=np.int64) % p
    nz = np.flatnonzero(v)
    if nz.size == 0:
        return v
    return v * inverse(int(v[nz[0]]), p) % p
