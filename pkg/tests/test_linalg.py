import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from superprolong import linalg


def matrices(p, max_rows=4, max_cols=4):
    shape = st.tuples(st.integers(1, max_rows), st.integers(1, max_cols))
    return shape.flatmap(lambda s: arrays(np.int64, s, elements=st.integers(0, p - 1)))


def brute_kernel(A, p):
    n = A.shape[1]
    return {v for v in itertools.product(range(p), repeat=n) if not (A @ np.array(v) % p).any()}


def span(rows, p):
    rows = np.atleast_2d(rows)
    if rows.size == 0:
        return {(0,) * rows.shape[1]}
    out = set()
    for c in itertools.product(range(p), repeat=len(rows)):
        out.add(tuple(np.array(c) @ rows % p))
    return out


@given(matrices(3))
def test_nullspace_matches_enumeration(A):
    K = linalg.nullspace(A, 3)
    got = span(K, 3) if len(K) else {(0,) * A.shape[1]}
    assert got == brute_kernel(A, 3)


@given(matrices(5, 3, 3))
def test_rank_nullity(A):
    assert linalg.rank(A, 5) + len(linalg.nullspace(A, 5)) == A.shape[1]


@given(matrices(7, 5, 6))
def test_rref_is_canonical(A):
    R, piv = linalg.rref(A, 7)
    R2, piv2 = linalg.rref(R[::-1], 7)
    assert piv == piv2 and np.array_equal(R, R2)
    for i, c in enumerate(piv):
        col = R[:, c]
        assert col[i] == 1 and np.count_nonzero(col) == 1


@pytest.mark.skipif(linalg.BACKEND != "compiled", reason="compiled kernel not built")
@given(matrices(11, 8, 8))
def test_backends_agree(A):
    Rc, pc = linalg.rref(A, 11, backend="compiled")
    Rp, pp = linalg.rref(A, 11, backend="python")
    assert pc == pp and np.array_equal(Rc, Rp)


def test_large_prime_no_overflow():
    p = 998244353
    rng = np.random.default_rng(0)
    A = rng.integers(0, p, size=(12, 15), dtype=np.int64)
    K = linalg.nullspace(A, p)
    assert K.shape == (3, 15)
    # exact check with Python integers
    assert not (A.astype(object) @ K.T.astype(object) % p).any()


@given(matrices(3, 4, 4), st.lists(st.integers(0, 2), min_size=4, max_size=4))
def test_solve(A, x):
    x = np.array(x[: A.shape[1]] + [0] * (A.shape[1] - len(x[: A.shape[1]])))
    b = A @ x % 3
    y = linalg.solve(A, b, 3)
    assert y is not None and np.array_equal(A @ y % 3, b)


def test_solve_inconsistent():
    assert linalg.solve(np.array([[1, 0], [1, 0]]), np.array([1, 2]), 3) is None


@given(matrices(3, 3, 3), matrices(3, 3, 3))
def test_intersection(A, B):
    if A.shape[1] != B.shape[1]:
        return
    I = linalg.intersect_rowspaces(A, B, 3)
    got = span(I, 3) if len(I) else {(0,) * A.shape[1]}
    assert got == span(A, 3) & span(B, 3)


def test_coordinates_and_reduce():
    E, piv = linalg.echelon([[1, 2, 0], [0, 1, 1]], 3)
    v = (2 * E[0] + E[1]) % 3
    assert np.array_equal(linalg.coordinates(v, E, piv, 3), [2, 1])
    assert linalg.coordinates([0, 0, 1], E, piv, 3) is None
    assert not linalg.reduce_vector(v, E, piv, 3).any()
    assert np.array_equal(linalg.normalize([0, 2, 1], 3), [0, 1, 2])


def test_pure_fallback_selected_by_environment():
    import os
    import subprocess
    import sys

    env = dict(os.environ, SUPERPROLONG_PURE="1")
    code = "from superprolong import linalg; print(linalg.BACKEND, linalg.rank([[1, 2], [2, 4]], 5))"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "1"]
