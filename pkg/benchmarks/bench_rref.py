"""Compare the compiled and pure-Python RREF kernels.

    python3 benchmarks/bench_rref.py [--repeat 3]

Runs random dense matrices over GF(3) and GF(1000003), and one membership
matrix from the N=2 prolong (degree 9).
"""

import argparse
import timeit

import numpy as np

from superprolong import ag2lab, linalg
from superprolong.prolong import membership_matrix, prolong_step


def cases():
    rng = np.random.default_rng(0)
    for p in (3, 1000003):
        for shape in ((200, 200), (400, 600), (800, 800)):
            yield f"random {shape[0]}x{shape[1]} p={p}", rng.integers(0, p, size=shape, dtype=np.int64), p
    m = ag2lab.build_model(3, 2)
    tilde = ag2lab.build_tilde_g0(m)
    border = m.g_minus[-1].basis()
    prev = tilde.g0
    for k in range(1, 9):
        prev = prolong_step(m.sig, k, border, prev)
    M = membership_matrix(m.sig, 9, border, prev)
    yield f"prolong N=2 degree 9 ({M.shape[0]}x{M.shape[1]})", M, 3


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if linalg.BACKEND != "compiled":
        print("compiled kernel not available; only the python backend runs")
    print(f"{'case':<44} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, A, p in cases():
        t_py = min(timeit.repeat(lambda: linalg.rref(A, p, backend="python"), number=1, repeat=args.repeat))
        if linalg.BACKEND == "compiled":
            t_c = min(timeit.repeat(lambda: linalg.rref(A, p, backend="compiled"), number=1, repeat=args.repeat))
            R1, p1 = linalg.rref(A, p, backend="python")
            R2, p2 = linalg.rref(A, p, backend="compiled")
            assert p1 == p2 and np.array_equal(R1, R2), name
            print(f"{name:<44} {t_py:>10.4f} {t_c:>11.4f} {t_py / t_c:>7.1f}x")
        else:
            print(f"{name:<44} {t_py:>10.4f} {'-':>11} {'-':>8}")


if __name__ == "__main__":
    main()
