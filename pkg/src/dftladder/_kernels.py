"""Cyclic Jacobi sweeps for Hermitian matrices.

Two interchangeable kernels:

* ``jacobi_numpy``: row/column updates with numpy slices; works on complex128
  arrays and on object arrays of mpmath numbers.
* ``jacobi_numba``: the same rotation sequence as an ``@njit`` loop nest,
  complex128 only.

``DFTLADDER_JIT=1`` selects the numba kernel for binary64 input.  It is off by
default because for the 5x5 matrices this package mostly handles, importing and
compiling numba costs more than it saves; see ``benchmarks/bench_jacobi.py``.
"""

from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

from .precision import sqrt_of

USE_JIT = os.getenv("DFTLADDER_JIT", "0").lower() not in ("", "0", "false", "no", "off")


def _off_norm_sq(a: np.ndarray):
    total = 0
    n = a.shape[0]
    for p in range(n):
        for q in range(n):
            if p != q:
                z = a[p, q]
                total += (z * z.conjugate()).real
    return total


def _rotation(app, aqq, apq):
    """Rotation (c, s, phase) that zeroes apq; phase = apq / |apq|."""
    mag = abs(apq)
    phase = apq / mag
    tau = (aqq - app) / (2 * mag)
    root = sqrt_of(1 + tau * tau)
    t = 1 / (tau + root) if tau >= 0 else -1 / (-tau + root)
    c = 1 / sqrt_of(1 + t * t)
    return c, t * c, phase


def jacobi_numpy(a: np.ndarray, tol, max_sweeps: int = 100):
    """Diagonalise Hermitian ``a`` (left untouched).

    Returns ``(diag, v, sweeps)`` where the columns of ``v`` are eigenvectors.
    ``tol`` bounds the off-diagonal Frobenius norm at exit.
    """
    a = a.copy()
    n = a.shape[0]
    v = np.zeros_like(a)
    for i in range(n):
        v[i, i] = a[0, 0] * 0 + 1
    tol_sq = tol * tol
    sweeps = 0
    while sweeps < max_sweeps and _off_norm_sq(a) > tol_sq:
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0:
                    continue
                c, s, phase = _rotation(a[p, p].real, a[q, q].real, apq)
                # G = [[c, s], [-s conj(phase), c conj(phase)]] acting on columns p, q
                g_qp = -s * phase.conjugate()
                g_qq = c * phase.conjugate()
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = col_p * c + col_q * g_qp
                a[:, q] = col_p * s + col_q * g_qq
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = row_p * c + row_q * g_qp.conjugate()
                a[q, :] = row_p * s + row_q * g_qq.conjugate()
                a[p, q] = a[q, p] = 0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = vp * c + vq * g_qp
                v[:, q] = vp * s + vq * g_qq
    diag = np.array([a[i, i].real for i in range(n)], dtype=object if a.dtype == object else float)
    return diag, v, sweeps


@lru_cache(maxsize=None)
def _compiled():
    import numba

    @numba.njit(cache=True)
    def kernel(a, tol, max_sweeps):
        n = a.shape[0]
        v = np.eye(n, dtype=np.complex128)
        sweeps = 0
        tol_sq = tol * tol
        while sweeps < max_sweeps:
            off = 0.0
            for p in range(n):
                for q in range(n):
                    if p != q:
                        off += a[p, q].real ** 2 + a[p, q].imag ** 2
            if off <= tol_sq:
                break
            sweeps += 1
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    mag = abs(apq)
                    if mag == 0.0:
                        continue
                    phase = apq / mag
                    tau = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                    root = np.sqrt(1.0 + tau * tau)
                    t = 1.0 / (tau + root) if tau >= 0.0 else -1.0 / (-tau + root)
                    c = 1.0 / np.sqrt(1.0 + t * t)
                    s = t * c
                    g_qp = -s * np.conj(phase)
                    g_qq = c * np.conj(phase)
                    for k in range(n):
                        akp = a[k, p]
                        akq = a[k, q]
                        a[k, p] = akp * c + akq * g_qp
                        a[k, q] = akp * s + akq * g_qq
                    for k in range(n):
                        apk = a[p, k]
                        aqk = a[q, k]
                        a[p, k] = apk * c + aqk * np.conj(g_qp)
                        a[q, k] = apk * s + aqk * np.conj(g_qq)
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    a[p, p] = a[p, p].real
                    a[q, q] = a[q, q].real
                    for k in range(n):
                        vkp = v[k, p]
                        vkq = v[k, q]
                        v[k, p] = vkp * c + vkq * g_qp
                        v[k, q] = vkp * s + vkq * g_qq
        diag = np.empty(n)
        for i in range(n):
            diag[i] = a[i, i].real
        return diag, v, sweeps

    return kernel


def jacobi_numba(a: np.ndarray, tol: float, max_sweeps: int = 100):
    return _compiled()(np.array(a, dtype=np.complex128), float(tol), max_sweeps)


def jacobi(a: np.ndarray, tol, max_sweeps: int = 100, jit: bool | None = None):
    """Dispatch to the numba kernel when enabled and the input is complex128."""
    use_jit = USE_JIT if jit is None else jit
    if use_jit and a.dtype != object:
        return jacobi_numba(a, tol, max_sweeps)
    return jacobi_numpy(a, tol, max_sweeps)
