"""Independent eigensolver oracle and helpers for comparing eigenvectors.

Nothing in here touches the sparse split or the ladder: the oracle works only
from dense matrices, so agreement with the ladder is a genuine cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .core import build_named_matrix, dft_matrix, frobenius_norm, i_power, inner_product, max_abs, norm
from .ladder import EigenPair, EigenSystem5, closed_form_spectrum
from .precision import BINARY64, PrecisionConfig, to_float

HERMITIAN_TOL = 1e-12
MAX_SWEEPS = 100

# Linear congruential generator (Knuth MMIX constants), state mod 2**64.
LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
LCG_MODULUS = 2**64


class NonHermitianError(ValueError):
    def __init__(self, asymmetry: float):
        super().__init__(f"matrix is not Hermitian: max |M - M^H| = {asymmetry:.3e}")
        self.asymmetry = asymmetry


@dataclass(frozen=True)
class OracleEigenResult:
    """Ascending eigenvalues; ``eigenvectors[:, j]`` belongs to ``eigenvalues[j]``."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int


def convergence_threshold(m: np.ndarray, config: PrecisionConfig) -> float:
    base = 1e-14 if config.mode == "binary64" else 10.0 ** -(config.digits - 2)
    return base * max(1.0, to_float(frobenius_norm(m)))


def hermitian_eigensolver(m: np.ndarray, config: PrecisionConfig = BINARY64,
                          jit: bool | None = None) -> OracleEigenResult:
    """Cyclic Jacobi diagonalisation of a Hermitian matrix."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    asymmetry = to_float(max_abs(m - np.conj(m).T))
    if asymmetry > HERMITIAN_TOL:
        raise NonHermitianError(asymmetry)
    m = config.backend.array(m)
    diag, v, sweeps = _kernels.jacobi(m, convergence_threshold(m, config), MAX_SWEEPS, jit=jit)
    order = sorted(range(len(diag)), key=lambda i: diag[i])
    if config.backend.extended:
        eigenvalues = np.array([diag[i] for i in order], dtype=object)
        vectors = v[:, order]
    else:
        eigenvalues = np.asarray(diag, dtype=float)[order]
        vectors = np.asarray(v, dtype=np.complex128)[:, order]
    return OracleEigenResult(eigenvalues, vectors, sweeps)


def eigenvector_match(a: np.ndarray, b: np.ndarray):
    """min over unit-modulus phases w of ||a - w b||."""
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")
    if norm(a) == 0 or norm(b) == 0:
        raise ValueError("eigenvector_match needs nonzero vectors")
    overlap = inner_product(b, a)
    phase = overlap / abs(overlap) if overlap != 0 else 1
    return norm(a - phase * b)


def _rotate_real_positive(v: np.ndarray, reference) -> np.ndarray:
    return v * (abs(reference) / reference)


def oracle_eigensystem(config: PrecisionConfig = BINARY64, jit: bool | None = None) -> EigenSystem5:
    """Eigenpairs of the number operator from the Jacobi oracle, labelled by n.

    Labels come from dense operators only: the kernel of the lowering operator is
    n = 0, DFT eigenvalue i^k gives n = k for k = 1, 2, 3, and the remaining
    vector with DFT eigenvalue 1 is n = 4.  Phases follow the ladder convention:
    f_0 has its largest component real positive, and (f_n, A^T f_{n-1}) > 0.
    """
    number = build_named_matrix("number", 5, config)
    phi = dft_matrix(5, config)
    raising = build_named_matrix("raising", 5, config)
    result = hermitian_eigensolver(number, config, jit=jit)

    labelled: dict[int, tuple] = {}
    for j in range(5):
        lam = result.eigenvalues[j]
        v = result.eigenvectors[:, j]
        if j == 0:
            n = 0  # smallest eigenvalue: the kernel of the lowering operator
        else:
            rayleigh = inner_product(v, phi @ v)
            k = min(range(4), key=lambda e: abs(rayleigh - i_power(e, config)))
            n = 4 if k == 0 else k
        if n in labelled:
            raise RuntimeError(f"oracle produced two eigenvectors labelled n={n}")
        labelled[n] = (lam, v)

    pairs = []
    previous = None
    for n in range(5):
        lam, v = labelled[n]
        if n == 0:
            pivot = max(range(5), key=lambda i: abs(v[i]))
            v = _rotate_real_positive(v, v[pivot])
        else:
            v = _rotate_real_positive(v, inner_product(v, raising @ previous))
        pairs.append(EigenPair(n, lam, v, n % 4, "symmetric" if n % 2 == 0 else "antisymmetric"))
        previous = v
    factors = tuple(norm(raising @ pairs[n].vector) for n in range(4))
    return EigenSystem5(tuple(pairs), closed_form_spectrum(config), factors)


def lcg_uniform(seed: int, count: int) -> list[float]:
    """``count`` reproducible draws, uniform in [-1, 1), from a 64-bit LCG.

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2**64, started
    at ``seed mod 2**64``; each draw uses the top 53 bits of the new state.
    """
    state = seed % LCG_MODULUS
    out = []
    for _ in range(count):
        state = (LCG_MULTIPLIER * state + LCG_INCREMENT) % LCG_MODULUS
        out.append(2.0 * ((state >> 11) / 2.0**53) - 1.0)
    return out
