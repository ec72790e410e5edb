"""Time the numpy and numba Jacobi kernels on random Hermitian matrices.

    python benchmarks/bench_jacobi.py [--sizes 5 16 32 64] [--repeat 5]
"""

import argparse
import time

import numpy as np

from dftladder import _kernels
from dftladder.oracle import lcg_uniform


def random_hermitian(n: int, seed: int) -> np.ndarray:
    draws = np.array(lcg_uniform(seed, 2 * n * n)).reshape(2, n, n)
    m = draws[0] + 1j * draws[1]
    return m + m.conj().T


def best_time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[5, 16, 32, 64])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    tol = 1e-14
    start = time.perf_counter()
    _kernels.jacobi_numba(random_hermitian(4, 0), tol)
    print(f"numba import + compile (or cache load): {time.perf_counter() - start:.3f} s")
    print(f"{'N':>4} {'numpy [s]':>12} {'numba [s]':>12} {'speedup':>9} {'max |dlambda|':>14}")
    for n in args.sizes:
        m = random_hermitian(n, n)
        scaled_tol = tol * max(1.0, np.linalg.norm(m))
        t_np = best_time(lambda: _kernels.jacobi_numpy(m, scaled_tol), args.repeat)
        t_nb = best_time(lambda: _kernels.jacobi_numba(m, scaled_tol), args.repeat)
        d_np = np.sort(_kernels.jacobi_numpy(m, scaled_tol)[0].astype(float))
        d_nb = np.sort(_kernels.jacobi_numba(m, scaled_tol)[0])
        print(f"{n:>4} {t_np:>12.5f} {t_nb:>12.5f} {t_np / t_nb:>8.1f}x {np.abs(d_np - d_nb).max():>14.2e}")


if __name__ == "__main__":
    main()
