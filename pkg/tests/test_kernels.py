import numpy as np
import pytest

from dftladder import _kernels
from dftladder.core import build_named_matrix
from dftladder.oracle import hermitian_eigensolver, lcg_uniform

numba = pytest.importorskip("numba")


def _random_hermitian(n, seed):
    draws = np.array(lcg_uniform(seed, 2 * n * n)).reshape(2, n, n)
    m = draws[0] + 1j * draws[1]
    return m + m.conj().T


@pytest.mark.parametrize("n,seed", [(5, 1), (16, 2), (33, 3)])
def test_numba_matches_numpy(n, seed):
    m = _random_hermitian(n, seed)
    d_np, v_np, s_np = _kernels.jacobi_numpy(m, 1e-13, 100)
    d_nb, v_nb, s_nb = _kernels.jacobi_numba(m, 1e-13, 100)
    assert s_np == s_nb
    np.testing.assert_allclose(d_nb, d_np.astype(float), atol=1e-12)
    np.testing.assert_allclose(v_nb, v_np, atol=1e-12)


def test_dispatch_flag():
    m = build_named_matrix("number", 5)
    a = hermitian_eigensolver(m, jit=True)
    b = hermitian_eigensolver(m, jit=False)
    np.testing.assert_allclose(a.eigenvalues, b.eigenvalues, atol=1e-14)


def test_input_untouched():
    m = _random_hermitian(6, 9)
    copy = m.copy()
    _kernels.jacobi_numpy(m, 1e-13, 100)
    _kernels.jacobi_numba(m, 1e-13, 100)
    np.testing.assert_array_equal(m, copy)
